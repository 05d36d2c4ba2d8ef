#pragma once

// Random inputs shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <random>

#include "gpi/algebra.hpp"
#include "gpi/constructions.hpp"

namespace gen {

using gpi::Field;
using gpi::Mat;
using gpi::Scalar;
using gpi::Subspace;
using gpi::Vec;

inline long small(std::mt19937_64 &rng, long lo = -3, long hi = 3) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Mat random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, long lo = -3, long hi = 3) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(small(rng, lo, hi));
  return m;
}

inline Mat random_invertible(std::mt19937_64 &rng, std::size_t k) {
  while (true) {
    Mat m = random_matrix(rng, k, k);
    if (gpi::rank(m) == k) return m;
  }
}

inline Mat unit(std::size_t k, std::size_t a, std::size_t b) {
  Mat e(k, k);
  e.at(a, b) = Scalar(1);
  return e;
}

// Diagonal projection onto coordinates [from, to), conjugated by s.
inline Mat conjugated_projection(const Mat &s, std::size_t from, std::size_t to) {
  std::size_t k = s.rows();
  Mat d(k, k);
  for (std::size_t i = from; i < to; ++i) d.at(i, i) = Scalar(1);
  return s * d * gpi::inverse(s);
}

inline Subspace left_ideal_generated(std::size_t k, const std::vector<Mat> &gens) {
  std::vector<Vec> vs;
  for (const auto &g : gens)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) vs.push_back(gpi::matrix_to_vec(unit(k, a, b) * g));
  return Subspace::span(k * k, Field{}, vs);
}

inline Subspace right_ideal_generated(std::size_t k, const std::vector<Mat> &gens) {
  std::vector<Vec> vs;
  for (const auto &g : gens)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) vs.push_back(gpi::matrix_to_vec(g * unit(k, a, b)));
  return Subspace::span(k * k, Field{}, vs);
}

inline Subspace random_subspace(std::mt19937_64 &rng, std::size_t k) {
  std::size_t d = std::uniform_int_distribution<std::size_t>(0, k)(rng);
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < d; ++i) {
    Vec v;
    for (std::size_t j = 0; j < k; ++j) v.push_back(Scalar(small(rng, -2, 2)));
    vs.push_back(v);
  }
  return Subspace::span(k, Field{}, vs);
}

inline Subspace random_left_ideal(std::mt19937_64 &rng, std::size_t k) {
  std::vector<Mat> gens;
  std::size_t g = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  for (std::size_t i = 0; i < g; ++i) {
    // low rank generators so every dimension shows up
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, k)(rng);
    gens.push_back(random_matrix(rng, k, r, -2, 2) * random_matrix(rng, r, k, -2, 2));
  }
  return left_ideal_generated(k, gens);
}

inline Subspace random_right_ideal(std::mt19937_64 &rng, std::size_t k) {
  std::vector<Mat> gens;
  std::size_t g = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  for (std::size_t i = 0; i < g; ++i) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, k)(rng);
    gens.push_back(random_matrix(rng, k, r, -2, 2) * random_matrix(rng, r, k, -2, 2));
  }
  return right_ideal_generated(k, gens);
}

// Orthogonal idempotents of M_2 summing to 1, of the given count; every member nonzero if asked.
inline std::vector<Mat> idempotent_family(std::mt19937_64 &rng, std::size_t count, bool nonzero) {
  std::vector<Mat> fam(count, Mat(2, 2));
  if (count == 1) {
    fam[0] = Mat::identity(2);
    return fam;
  }
  bool split = nonzero || std::uniform_int_distribution<int>(0, 2)(rng) > 0;
  std::vector<std::size_t> slot(count);
  for (std::size_t i = 0; i < count; ++i) slot[i] = i;
  std::shuffle(slot.begin(), slot.end(), rng);
  if (split) {
    Mat s = random_invertible(rng, 2);
    fam[slot[0]] = conjugated_projection(s, 0, 1);
    fam[slot[1]] = conjugated_projection(s, 1, 2);
  } else {
    fam[slot[0]] = Mat::identity(2);
  }
  return fam;
}

inline Mat one_minus(const Mat &e) {
  Mat r = Mat::identity(e.rows());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) r.at(i, j) = r.at(i, j) - e.at(i, j);
  return r;
}

inline Mat as_columns(const Subspace &s) { return Mat::from_columns(s.basis(), s.ambient(), Field{}); }

// k = 2, n*m <= 6.
inline gpi::ExistenceInput random_existence_input(std::mt19937_64 &rng) {
  gpi::ExistenceInput e;
  e.k = 2;
  do {
    e.n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    e.m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  } while (e.n * e.m > 6);
  e.row_idempotents = idempotent_family(rng, e.n, false);
  e.column_idempotents = idempotent_family(rng, e.m, false);
  auto pick_zero = [&] { return std::uniform_int_distribution<int>(0, 3)(rng) == 0; };
  for (std::size_t j = 0; j < e.m; ++j) {
    Subspace l(4, Field{});
    if (!pick_zero()) l = left_ideal_generated(2, {random_matrix(rng, 2, 2) * one_minus(e.column_idempotents[j])});
    e.left_modules.push_back(as_columns(l));
  }
  for (std::size_t i = 0; i < e.n; ++i) {
    Subspace r(4, Field{});
    if (!pick_zero()) r = right_ideal_generated(2, {one_minus(e.row_idempotents[i]) * random_matrix(rng, 2, 2)});
    e.right_modules.push_back(as_columns(r));
  }
  return e;
}

// B_ij = f'_i L_j with nonzero f'_i and nonzero left ideals L_j summing to M_2;
// the sandwich records which L_j f'_l are nonzero.
inline gpi::DecompositionInput random_decomposition_input(std::mt19937_64 &rng) {
  gpi::DecompositionInput d;
  d.k = 2;
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  auto fp = idempotent_family(rng, n, true);
  std::vector<Subspace> ls;
  while (true) {
    ls.clear();
    Subspace sum(4, Field{});
    for (std::size_t j = 0; j < m; ++j) {
      bool full = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
      Mat g = full ? Mat::identity(2) : conjugated_projection(random_invertible(rng, 2), 0, 1);
      ls.push_back(left_ideal_generated(2, {g}));
      sum = sum + ls.back();
    }
    if (sum.dim() == 4) break;
  }
  d.pres.n = n;
  d.pres.m = m;
  d.pres.sandwich.assign(m, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      bool nz = false;
      for (const auto &v : ls[j].basis()) nz = nz || !gpi::is_zero(gpi::matrix_to_vec(gpi::vec_to_matrix(v, 2) * fp[l]));
      d.pres.sandwich[j][l] = nz;
    }
  d.blocks.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Vec> vs;
      for (const auto &v : ls[j].basis()) vs.push_back(gpi::matrix_to_vec(fp[i] * gpi::vec_to_matrix(v, 2)));
      d.blocks[i].push_back(Subspace::span(4, Field{}, vs));
    }
  return d;
}

// m x n sandwich with entries in -2..2, no zero row or column.
inline Mat random_sandwich(std::mt19937_64 &rng, std::size_t n, std::size_t m) {
  while (true) {
    Mat p = random_matrix(rng, m, n, -2, 2);
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) any = any || !p.at(j, i).is_zero();
      ok = any;
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < m; ++j) any = any || !p.at(j, i).is_zero();
      ok = any;
    }
    if (ok) return p;
  }
}

} // namespace gen
