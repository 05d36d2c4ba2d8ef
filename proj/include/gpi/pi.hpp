#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpi/algebra.hpp"

namespace gpi {

// Multilinear polynomial in x_0..x_{n-1}; each variable carries a degree label per term.
// A term is (word, labels): word[p] is the variable at position p, labels[v] the degree of x_v.
class MultilinearGradedPolynomial {
public:
  using Word = std::vector<std::uint16_t>;
  using Labels = std::vector<std::size_t>;
  using Key = std::pair<Word, Labels>;

  MultilinearGradedPolynomial() = default;
  explicit MultilinearGradedPolynomial(std::size_t n, Field f = {}) : n_(n), field_(f) {}
  // Single monomial x_{word[0]} ... x_{word[n-1]}.
  static MultilinearGradedPolynomial monomial(const Word &word, const Labels &labels, Field f = {});

  std::size_t degree() const { return n_; }
  Field field() const { return field_; }
  const std::map<Key, Scalar> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word &word, const Labels &labels, const Scalar &c);
  MultilinearGradedPolynomial &operator+=(const MultilinearGradedPolynomial &o);
  MultilinearGradedPolynomial operator+(const MultilinearGradedPolynomial &o) const;
  MultilinearGradedPolynomial operator-(const MultilinearGradedPolynomial &o) const;
  MultilinearGradedPolynomial scaled(const Scalar &c) const;
  bool operator==(const MultilinearGradedPolynomial &o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // (σf)(x_0..x_{n-1}) = f(x_{σ(0)},...,x_{σ(n-1)}).
  MultilinearGradedPolynomial permuted(const std::vector<std::size_t> &sigma) const;
  // fg with the variables of g shifted by deg f.
  MultilinearGradedPolynomial times(const MultilinearGradedPolynomial &g) const;
  std::string str() const;

private:
  std::size_t n_ = 0;
  Field field_;
  std::map<Key, Scalar> terms_;
};

Vec evaluate(const MultilinearGradedPolynomial &f, const GradedAlgebra &a, const std::vector<Vec> &subs);
bool is_graded_identity(const MultilinearGradedPolynomial &f, const GradedAlgebra &a);

// --- codimensions ----------------------------------------------------------

struct CodimOptions {
  double budget = 1e8; // |supp|^n * n! * dim A
  unsigned threads = 0; // 0: hardware concurrency
  std::uint64_t seed = 0x5eed;
};

struct CodimResult {
  std::uint64_t value = 0;
  double budget_used = 0;
  std::size_t blocks = 0, skipped = 0;
};

CodimResult graded_codimension_report(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt = {});
inline std::uint64_t graded_codimension(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt = {}) {
  return graded_codimension_report(a, n, opt).value;
}
std::uint64_t ordinary_codimension(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt = {});
bool codimension_sandwich_check(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt = {});
double codimension_budget_figure(const GradedAlgebra &a, std::size_t n, bool graded);

// --- Young diagrams --------------------------------------------------------

struct Partition {
  std::vector<std::size_t> parts;

  Partition() = default;
  explicit Partition(std::vector<std::size_t> p); // checks weakly decreasing, positive
  std::size_t size() const;
  std::size_t length() const { return parts.size(); }
  std::size_t part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; } // 0-based
  Partition conjugate() const;
  bool operator==(const Partition &o) const { return parts == o.parts; }
  std::string str() const;
};

std::vector<Partition> partitions(std::size_t n, std::size_t max_parts = SIZE_MAX);
Integer hook_dimension(const Partition &p);

// rows[i][j] is the variable in cell (i, j); a bijection onto 0..n-1.
struct YoungTableau {
  Partition shape;
  std::vector<std::vector<std::size_t>> rows;

  YoungTableau() = default;
  YoungTableau(Partition shape, std::vector<std::vector<std::size_t>> rows);
  static YoungTableau row_reading(const Partition &p); // 0,1,2,... along rows
  std::vector<std::vector<std::size_t>> columns() const;
};

MultilinearGradedPolynomial apply_row_symmetrizer(const YoungTableau &t, const MultilinearGradedPolynomial &f);
MultilinearGradedPolynomial apply_column_alternator(const YoungTableau &t, const MultilinearGradedPolynomial &f);
// e*_T f = b_T a_T f
inline MultilinearGradedPolynomial apply_young_symmetrizer(const YoungTableau &t, const MultilinearGradedPolynomial &f) {
  return apply_column_alternator(t, apply_row_symmetrizer(t, f));
}

bool vanishing_partition(const Partition &lambda, const std::vector<int> &gamma, std::size_t k, std::size_t r);

// --- witnesses -------------------------------------------------------------

// Σ sgn(σρ) x_σ1 y_ρ1 x_σ2 x_σ3 x_σ4 y_ρ2 y_ρ3 y_ρ4 with x = vars 0..3, y = vars 4..7.
MultilinearGradedPolynomial witness_f0(std::size_t label = 0, Field f = {});
// [x0,x1][x2,x3] + [x2,x3][x0,x1], labels t1 on x0,x1 and t2 on x2,x3.
MultilinearGradedPolynomial witness_pair(std::size_t t1, std::size_t t2, Field f = {});
// [x0,x1][x4,x5][x2,x3] - [x2,x3][x4,x5][x0,x1].
MultilinearGradedPolynomial witness_triple(std::size_t t1, std::size_t t2, std::size_t t3, Field f = {});
// Orders T0 so consecutive pairs (and an odd tail of three) are non-equivalent.
std::vector<std::size_t> triangle_pairing(const std::vector<std::vector<std::size_t>> &classes);

// A product of polynomials on disjoint variables, alternated over given variable sets.
struct AlternatingPolynomial {
  struct Factor {
    MultilinearGradedPolynomial poly;
    std::vector<std::size_t> vars; // local variable i is global vars[i]
  };
  std::size_t n = 0;
  Field field;
  std::vector<std::size_t> labels; // degree per global variable
  std::vector<Factor> factors;     // multiplied left to right
  std::vector<std::vector<std::size_t>> alternating_sets;

  // Sum over degree-compatible permutations only; the others vanish term by term.
  // Throws once the search visits more than max_nodes partial permutations.
  Vec evaluate(const GradedAlgebra &a, const std::vector<Vec> &subs, std::uint64_t max_nodes = 200000000) const;
  MultilinearGradedPolynomial product() const;
  // Throws when the expansion would exceed max_terms.
  MultilinearGradedPolynomial expand(std::size_t max_terms = 200000) const;
  double expanded_size_bound() const;
};

} // namespace gpi
