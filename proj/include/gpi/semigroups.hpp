#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gpi {

class FiniteSemigroup {
public:
  FiniteSemigroup() = default;
  // Throws on a non-associative table or a bogus zero.
  FiniteSemigroup(std::vector<std::vector<std::size_t>> table,
                  std::optional<std::size_t> zero = std::nullopt,
                  std::vector<std::string> labels = {});

  std::size_t size() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::optional<std::size_t> zero() const { return zero_; }
  bool is_zero(std::size_t a) const { return zero_ && *zero_ == a; }
  const std::vector<std::vector<std::size_t>> &table() const { return table_; }
  std::string label(std::size_t a) const;
  bool operator==(const FiniteSemigroup &o) const { return table_ == o.table_ && zero_ == o.zero_; }

private:
  std::vector<std::vector<std::size_t>> table_;
  std::optional<std::size_t> zero_;
  std::vector<std::string> labels_;
};

// M({e}^0, n, m; P) with P stored m x n: sandwich[j][k] multiplies (.,j)(k,.).
struct ReesPresentation {
  std::size_t n = 0, m = 0;
  std::vector<std::vector<bool>> sandwich;

  static ReesPresentation all_e(std::size_t n, std::size_t m);
  std::size_t element(std::size_t i, std::size_t j) const { return i * m + j; }
  std::size_t theta() const { return n * m; }
};

FiniteSemigroup rees_semigroup(const ReesPresentation &pres);
FiniteSemigroup right_zero_band(std::size_t k);
FiniteSemigroup trivial_semigroup();
FiniteSemigroup with_zero(const FiniteSemigroup &s); // adjoins a fresh θ as last index

bool is_zero_simple(const FiniteSemigroup &s);
// S^1 a S^1 as an indicator vector.
std::vector<bool> principal_ideal(const FiniteSemigroup &s, std::size_t a);

struct ReesCoordinates {
  ReesPresentation pres;
  // (row, column) per element; the zero maps to (npos, npos)
  std::vector<std::pair<std::size_t, std::size_t>> coord;
};

struct GreenResult {
  bool nontrivial_subgroups = false;
  ReesCoordinates rees;
};

GreenResult green_trivial_rees_coordinates(const FiniteSemigroup &s);

struct SubSemigroup {
  FiniteSemigroup semigroup;
  std::vector<long> original_index; // -1 for an adjoined θ
};

SubSemigroup support_closure(const FiniteSemigroup &s, const std::vector<std::size_t> &supp);
// S / I for an ideal I given as an indicator; I must contain the zero if there is one.
SubSemigroup rees_quotient(const FiniteSemigroup &s, const std::vector<bool> &ideal);

} // namespace gpi
