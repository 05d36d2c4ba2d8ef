#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpi/kernel.hpp"
#include "gpi/semigroups.hpp"
#include "gpi/subspace.hpp"

namespace gpi {

// Structure constants: b_i b_j = sum_k c[i][j][k] b_k.
class Algebra {
public:
  Algebra() = default;
  Algebra(Field f, std::size_t dim);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  void set_product(std::size_t i, std::size_t j, const Vec &v);
  const Scalar &coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return dense_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<std::pair<std::size_t, Scalar>> &sparse(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }
  Vec product(std::size_t i, std::size_t j) const;
  Vec mul(const Vec &x, const Vec &y) const;
  Vec zero() const { return zero_vec(dim_, field_); }
  Vec basis_vec(std::size_t i) const { return unit_vec(dim_, i, field_); }
  Mat left_mult(const Vec &x) const;  // matrix of y -> xy
  Mat right_mult(const Vec &x) const; // matrix of y -> yx
  bool operator==(const Algebra &o) const { return dim_ == o.dim_ && field_ == o.field_ && dense_ == o.dense_; }

  // Same algebra in the basis given by the rows of `basis` (must span).
  Algebra rebased(const std::vector<Vec> &basis) const;
  // Structure of a subalgebra spanned by `basis` (independent, closed).
  Algebra restricted(const std::vector<Vec> &basis) const;

private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> dense_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

Algebra matrix_algebra(std::size_t k, Field f = {});
Mat vec_to_matrix(const Vec &v, std::size_t k);
Vec matrix_to_vec(const Mat &m);

class GradedAlgebra {
public:
  GradedAlgebra() = default;
  GradedAlgebra(Algebra alg, FiniteSemigroup sg, std::vector<std::size_t> degree,
                std::vector<std::string> names = {});

  const Algebra &algebra() const { return alg_; }
  const FiniteSemigroup &semigroup() const { return sg_; }
  std::size_t dim() const { return alg_.dim(); }
  Field field() const { return alg_.field(); }
  std::size_t degree(std::size_t i) const { return degree_[i]; }
  const std::vector<std::size_t> &degrees() const { return degree_; }
  const std::vector<std::string> &names() const { return names_; }
  std::vector<std::size_t> support() const;
  std::vector<std::size_t> component(std::size_t t) const;
  Subspace component_space(std::size_t t) const;
  // The degree of a nonzero homogeneous vector, nullopt otherwise.
  std::optional<std::size_t> degree_of(const Vec &v) const;
  GradedAlgebra regraded(FiniteSemigroup sg, std::vector<std::size_t> degree) const;

private:
  Algebra alg_;
  FiniteSemigroup sg_;
  std::vector<std::size_t> degree_;
  std::vector<std::string> names_;
};

GradedAlgebra trivially_graded(const Algebra &a, std::vector<std::string> names = {});
// The graded algebra spanned by homogeneous vectors (checked).
GradedAlgebra graded_subalgebra(const GradedAlgebra &a, const std::vector<Vec> &basis);

struct Violation {
  enum Kind { associativity, grading, theta_degree } kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};
std::vector<Violation> validate(const GradedAlgebra &a);

// --- radical and quotient --------------------------------------------------

Subspace jacobson_radical(const Algebra &a);
inline Subspace jacobson_radical(const GradedAlgebra &a) { return jacobson_radical(a.algebra()); }
Subspace products_span(const Algebra &a, const Subspace &x, const Subspace &y);
inline Subspace square(const Algebra &a) { auto f = Subspace::full(a.dim(), a.field()); return products_span(a, f, f); }
bool homogeneous_components_meet_radical(const GradedAlgebra &a);

struct Quotient {
  Algebra q;
  Subspace radical;
  std::vector<std::size_t> lift; // A-basis index for each quotient basis element
  Vec project(const Vec &a) const;
  Vec lift_vec(const Vec &x) const;
  Mat projection() const; // dim q x dim A
};
Quotient radical_quotient(const Algebra &a, const Subspace &j);
inline Quotient radical_quotient(const Algebra &a) { return radical_quotient(a, jacobson_radical(a)); }

std::optional<Vec> unit_element(const Algebra &a);
Subspace center(const Algebra &a);
Subspace left_annihilator(const Algebra &a);
Subspace right_annihilator(const Algebra &a);
// A nontrivial idempotent of a commutative semisimple algebra when one is detectable.
std::optional<Vec> central_idempotent(const Algebra &a);

// --- graded simplicity -----------------------------------------------------

struct ReducedGrading {
  enum Status { ok, proper_ideal, unsupported } status = ok;
  std::string note;
  ReesPresentation pres;
  std::vector<std::pair<std::size_t, std::size_t>> cell; // per basis element
};
ReducedGrading reduce_grading(const GradedAlgebra &a);

struct GradedSimplicity {
  enum Verdict { yes, no, unsupported, indeterminate } verdict = no;
  std::string certificate;
  bool holds() const { return verdict == yes; }
};
GradedSimplicity is_graded_simple(const GradedAlgebra &a);
bool is_faithful(const GradedAlgebra &a);
// Ungraded simplicity through the trivial grading.
GradedSimplicity is_simple(const Algebra &a);

// --- graded Wedderburn-Malcev ---------------------------------------------

struct WMDecomposition {
  Subspace B;
  Vec unit_of_B;
  std::vector<Vec> row_idempotents;    // f'_i
  std::vector<Vec> column_idempotents; // f_j
  Subspace radical;
  ReducedGrading grading;
};

struct WMResult {
  std::optional<WMDecomposition> decomposition;
  std::string failure;
};
WMResult wm_graded_decomposition(const GradedAlgebra &a);

struct LayerReport {
  bool ok = false;
  std::string failure;
  std::vector<std::size_t> j10_dims, j01_dims;
  std::size_t j2_dim = 0, radical_dim = 0, b_dim = 0;
};
LayerReport radical_square_layers(const GradedAlgebra &a, const WMDecomposition &d);

// --- left ideals of M_k (k x k matrices flattened row-major) --------------

Subspace ann_duality(std::size_t k, const Subspace &w);         // {a : aW = 0}
Subspace ann_duality_inverse(std::size_t k, const Subspace &i); // common kernel
Subspace right_ann(std::size_t k, const Subspace &u);           // {a : ua = 0}, u rows
bool is_left_ideal(std::size_t k, const Subspace &i);
bool is_right_ideal(std::size_t k, const Subspace &i);
Mat simultaneous_column_form(std::size_t k, const std::vector<Subspace> &ideals);
Vec minimal_left_ideal_row(const Subspace &i, std::size_t k);
Subspace left_ideal_of_row(std::size_t k, const Vec &row);

struct SplitIso {
  std::size_t k = 0;
  Mat psi;     // k^2 x dim q
  Mat psi_inv; // dim q x k^2
  Vec apply(const Vec &x) const { return psi.apply(x); }
};
SplitIso split_iso_to_matrix(const Algebra &q, const std::vector<Subspace> &distinguished = {});

bool graded_iso_check(const GradedAlgebra &a1, const GradedAlgebra &a2, const Mat &quotient_match);

// Peirce-style helpers shared with the constructions.
// e in U with ue = u for all u in the left ideal U.
Vec right_unit_of(const Algebra &a, const Subspace &u);
// e in U with eu = u for all u in the right ideal U.
Vec left_unit_of(const Algebra &a, const Subspace &u);
Subspace times_right(const Algebra &a, const Subspace &x, const Vec &r); // {x r}
Subspace times_left(const Algebra &a, const Vec &l, const Subspace &x);  // {l x}
// x(1 - r) and (1 - r)x without assuming a unit.
Subspace times_one_minus_right(const Algebra &a, const Subspace &x, const Vec &r);
Subspace times_one_minus_left(const Algebra &a, const Vec &l, const Subspace &x);
bool is_idempotent(const Algebra &a, const Vec &e);
// Complements of bar_j ∩ (bar_1 + ... + bar_{j-1}) inside bar_j, as left (or right) ideals
// of a semisimple algebra.
std::vector<Subspace> ideal_complements(const Algebra &q, const std::vector<Subspace> &bars, bool left_ideals);

} // namespace gpi
