#pragma once

// Independent reference computations. Nothing here calls the codimension engine,
// the Young machinery or the library's rank routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "gpi/algebra.hpp"

namespace oracle {

using u64 = std::uint64_t;

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

inline u64 reduce(const gpi::Scalar &s, u64 p) {
  if (!s.is_rational()) return s.residue() % p;
  mpz_class num = s.rational().get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = s.rational().get_den() % static_cast<unsigned long>(p);
  return num.get_ui() * powmod(den.get_ui(), p - 2, p) % p;
}

// Plain Gaussian elimination mod p on a dense row-major matrix.
inline std::size_t rank_mod(std::vector<std::vector<u64>> m, u64 p) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = powmod(m[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      u64 f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  return r;
}

// c_n (graded or ordinary) as the rank of one matrix: a row per (labelling, word),
// a column per (labelling, basis tuple, output coordinate). Every monomial is
// multiplied out from scratch. Returns the larger rank over two primes.
inline std::uint64_t codimension(const gpi::GradedAlgebra &a, std::size_t n, bool graded) {
  const u64 primes[2] = {1000000007ULL, 998244353ULL};
  std::size_t d = a.dim();
  std::vector<std::size_t> supp = graded ? a.support() : std::vector<std::size_t>{0};
  std::vector<std::vector<std::size_t>> comp;
  for (auto t : supp) {
    if (graded) comp.push_back(a.component(t));
    else {
      comp.emplace_back(d);
      std::iota(comp.back().begin(), comp.back().end(), 0);
    }
  }
  // enumerate labellings and, per labelling, its basis tuples
  std::vector<std::vector<std::size_t>> labellings{{}};
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto &l : labellings)
      for (std::size_t s = 0; s < supp.size(); ++s) {
        next.push_back(l);
        next.back().push_back(s);
      }
    labellings = std::move(next);
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), 0);
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));

  std::uint64_t best = 0;
  for (u64 p : primes) {
    std::vector<std::vector<std::vector<u64>>> c(d, std::vector<std::vector<u64>>(d, std::vector<u64>(d)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) c[i][j][k] = reduce(a.algebra().coeff(i, j, k), p);
    auto mul_basis = [&](const std::vector<u64> &x, std::size_t b) {
      std::vector<u64> out(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        if (x[i])
          for (std::size_t k = 0; k < d; ++k) out[k] = (out[k] + x[i] * c[i][b][k]) % p;
      return out;
    };
    std::vector<std::vector<std::vector<std::size_t>>> tuples(labellings.size());
    std::size_t total_cols = 0;
    std::vector<std::size_t> col_offset;
    for (std::size_t li = 0; li < labellings.size(); ++li) {
      std::vector<std::vector<std::size_t>> ts{{}};
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto &t : ts)
          for (auto b : comp[labellings[li][v]]) {
            next.push_back(t);
            next.back().push_back(b);
          }
        ts = std::move(next);
      }
      tuples[li] = std::move(ts);
      col_offset.push_back(total_cols);
      total_cols += tuples[li].size() * d;
    }
    std::vector<std::vector<u64>> m;
    for (std::size_t li = 0; li < labellings.size(); ++li)
      for (const auto &perm : perms) {
        std::vector<u64> row(total_cols, 0);
        for (std::size_t ti = 0; ti < tuples[li].size(); ++ti) {
          const auto &t = tuples[li][ti];
          std::vector<u64> x(d, 0);
          x[t[perm[0]]] = 1;
          for (std::size_t pos = 1; pos < n; ++pos) x = mul_basis(x, t[perm[pos]]);
          for (std::size_t k = 0; k < d; ++k) row[col_offset[li] + ti * d + k] = x[k];
        }
        m.push_back(std::move(row));
      }
    best = std::max<std::uint64_t>(best, rank_mod(std::move(m), p));
  }
  return best;
}

// Standard Young tableaux of a shape, by removing the cell holding n.
inline std::uint64_t syt_count(std::vector<std::size_t> shape) {
  static std::map<std::vector<std::size_t>, std::uint64_t> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (i + 1 == shape.size() || shape[i] > shape[i + 1]) {
      auto s = shape;
      --s[i];
      total += syt_count(s);
    }
  return memo[shape] = total;
}

} // namespace oracle
