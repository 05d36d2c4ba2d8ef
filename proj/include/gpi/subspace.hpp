#pragma once

#include <vector>

#include "gpi/kernel.hpp"

namespace gpi {

// Row space in reduced echelon form; equal spaces have equal bases.
class Subspace {
public:
  Subspace() = default;
  Subspace(std::size_t ambient, Field f) : ambient_(ambient), field_(f) {}
  static Subspace span(std::size_t ambient, Field f, std::vector<Vec> vs);
  static Subspace full(std::size_t ambient, Field f);

  std::size_t ambient() const { return ambient_; }
  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  Vec reduce(const Vec &v) const; // v minus its component along the pivots
  bool contains(const Vec &v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace &o) const;
  // Coordinates in basis(); throws when v is outside.
  Vec coordinates(const Vec &v) const;
  bool operator==(const Subspace &o) const;
  bool operator!=(const Subspace &o) const { return !(*this == o); }

private:
  std::size_t ambient_ = 0;
  Field field_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace &a, const Subspace &b);
Subspace intersect(const Subspace &a, const Subspace &b);
// Checks that the spaces form a direct sum.
bool is_direct(const std::vector<Subspace> &parts);
// Splits v along a direct sum; nullopt when v is outside the sum.
std::optional<std::vector<Vec>> split_along(const std::vector<Subspace> &parts, const Vec &v);
Subspace image(const Mat &m, const Subspace &s);

// Coordinates with respect to an arbitrary independent family.
class BasisCoords {
public:
  BasisCoords(std::vector<Vec> basis, std::size_t ambient, Field f);
  std::size_t size() const { return n_; }
  std::optional<Vec> coords(const Vec &v) const;

private:
  std::size_t n_ = 0, ambient_ = 0;
  Field field_;
  std::vector<Vec> rows_;  // reduced echelon form of the family
  std::vector<Vec> trans_; // rows_[p] = sum_i trans_[p][i] basis[i]
  std::vector<std::size_t> piv_;
};

} // namespace gpi
