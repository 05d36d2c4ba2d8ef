#include "gpi/semigroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpi/kernel.hpp"

namespace gpi {

FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<std::size_t>> table,
                                 std::optional<std::size_t> zero,
                                 std::vector<std::string> labels)
    : table_(std::move(table)), zero_(zero), labels_(std::move(labels)) {
  std::size_t n = table_.size();
  if (n == 0) throw Error("empty semigroup");
  for (const auto &row : table_) {
    if (row.size() != n) throw Error("semigroup table is not square");
    for (auto x : row)
      if (x >= n) throw Error("semigroup table entry out of range");
  }
  if (!labels_.empty() && labels_.size() != n) throw Error("label count mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error("semigroup table is not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  if (zero_) {
    if (*zero_ >= n) throw Error("zero index out of range");
    for (std::size_t x = 0; x < n; ++x)
      if (table_[*zero_][x] != *zero_ || table_[x][*zero_] != *zero_)
        throw Error("declared zero is not a zero");
  }
}

std::string FiniteSemigroup::label(std::size_t a) const {
  if (!labels_.empty()) return labels_[a];
  if (is_zero(a)) return "0";
  return "s" + std::to_string(a);
}

ReesPresentation ReesPresentation::all_e(std::size_t n, std::size_t m) {
  return {n, m, std::vector<std::vector<bool>>(m, std::vector<bool>(n, true))};
}

FiniteSemigroup rees_semigroup(const ReesPresentation &p) {
  if (p.n == 0 || p.m == 0) throw Error("not 0-simple presentation");
  if (p.sandwich.size() != p.m) throw Error("sandwich must be m x n");
  for (std::size_t j = 0; j < p.m; ++j) {
    if (p.sandwich[j].size() != p.n) throw Error("sandwich must be m x n");
    if (std::none_of(p.sandwich[j].begin(), p.sandwich[j].end(), [](bool b) { return b; }))
      throw Error("not 0-simple presentation");
  }
  for (std::size_t k = 0; k < p.n; ++k) {
    bool any = false;
    for (std::size_t j = 0; j < p.m; ++j) any = any || p.sandwich[j][k];
    if (!any) throw Error("not 0-simple presentation");
  }
  std::size_t th = p.theta(), sz = th + 1;
  std::vector<std::vector<std::size_t>> t(sz, std::vector<std::size_t>(sz, th));
  std::vector<std::string> labels(sz);
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.m; ++j) {
      labels[p.element(i, j)] = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      for (std::size_t k = 0; k < p.n; ++k)
        for (std::size_t l = 0; l < p.m; ++l)
          if (p.sandwich[j][k]) t[p.element(i, j)][p.element(k, l)] = p.element(i, l);
    }
  labels[th] = "0";
  return FiniteSemigroup(std::move(t), th, std::move(labels));
}

FiniteSemigroup right_zero_band(std::size_t k) {
  if (k == 0) throw Error("right zero band needs k >= 1");
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  std::vector<std::string> labels(k);
  for (std::size_t s = 0; s < k; ++s) {
    labels[s] = "e" + std::to_string(s + 1);
    for (std::size_t u = 0; u < k; ++u) t[s][u] = u;
  }
  return FiniteSemigroup(std::move(t), std::nullopt, std::move(labels));
}

FiniteSemigroup trivial_semigroup() { return FiniteSemigroup({{0}}, std::nullopt, {"e"}); }

FiniteSemigroup with_zero(const FiniteSemigroup &s) {
  std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, n));
  std::vector<std::string> labels(n + 1);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = s.label(a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = s.mul(a, b);
  }
  labels[n] = "0";
  return FiniteSemigroup(std::move(t), n, std::move(labels));
}

std::vector<bool> principal_ideal(const FiniteSemigroup &s, std::size_t a) {
  std::size_t n = s.size();
  std::vector<bool> in(n, false);
  in[a] = true;
  for (std::size_t x = 0; x < n; ++x) {
    in[s.mul(x, a)] = true;
    in[s.mul(a, x)] = true;
    for (std::size_t y = 0; y < n; ++y) in[s.mul(s.mul(x, a), y)] = true;
  }
  return in;
}

bool is_zero_simple(const FiniteSemigroup &s) {
  if (!s.zero()) throw Error("is_zero_simple needs a zero element; adjoin one first");
  std::size_t z = *s.zero(), n = s.size();
  bool square_nonzero = false;
  for (std::size_t a = 0; a < n && !square_nonzero; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (s.mul(a, b) != z) { square_nonzero = true; break; }
  if (!square_nonzero) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == z) continue;
    auto in = principal_ideal(s, a);
    if (std::find(in.begin(), in.end(), false) != in.end()) return false;
  }
  return true;
}

GreenResult green_trivial_rees_coordinates(const FiniteSemigroup &s) {
  if (!s.zero() || !is_zero_simple(s)) throw Error("green coordinates need a 0-simple semigroup");
  std::size_t n = s.size(), z = *s.zero();
  auto right_ideal = [&](std::size_t a) {
    std::vector<bool> v(n, false);
    v[a] = true;
    for (std::size_t x = 0; x < n; ++x) v[s.mul(a, x)] = true;
    return v;
  };
  auto left_ideal = [&](std::size_t a) {
    std::vector<bool> v(n, false);
    v[a] = true;
    for (std::size_t x = 0; x < n; ++x) v[s.mul(x, a)] = true;
    return v;
  };
  std::map<std::vector<bool>, std::size_t> rmap, lmap;
  std::vector<std::size_t> rc(n, 0), lc(n, 0);
  std::vector<std::size_t> rrep, lrep;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == z) continue;
    auto r = right_ideal(a), l = left_ideal(a);
    auto [ri, rnew] = rmap.emplace(r, rmap.size());
    auto [li, lnew] = lmap.emplace(l, lmap.size());
    if (rnew) rrep.push_back(a);
    if (lnew) lrep.push_back(a);
    rc[a] = ri->second;
    lc[a] = li->second;
  }
  GreenResult out;
  std::size_t rows = rmap.size(), cols = lmap.size();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == z) continue;
    if (!seen.insert({rc[a], lc[a]}).second) {
      out.nontrivial_subgroups = true;
      return out;
    }
  }
  if (seen.size() != rows * cols) throw Error("semigroup is not completely 0-simple");
  ReesPresentation p;
  p.n = rows;
  p.m = cols;
  p.sandwich.assign(cols, std::vector<bool>(rows, false));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t k = 0; k < rows; ++k) p.sandwich[j][k] = s.mul(lrep[j], rrep[k]) != z;
  out.rees.pres = p;
  out.rees.coord.assign(n, {static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)});
  for (std::size_t a = 0; a < n; ++a)
    if (a != z) out.rees.coord[a] = {rc[a], lc[a]};
  // re-verify the whole table against the presentation
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = s.mul(a, b);
      bool expect_zero = a == z || b == z || !p.sandwich[lc[a]][rc[b]];
      if (expect_zero ? ab != z : (ab == z || rc[ab] != rc[a] || lc[ab] != lc[b]))
        throw Error("table disagrees with its Rees coordinates");
    }
  return out;
}

namespace {

SubSemigroup induced(const FiniteSemigroup &s, const std::vector<std::size_t> &keep,
                     bool adjoin_theta, std::optional<std::size_t> old_zero) {
  // keep is sorted and excludes the zero; the zero (old or new) goes last
  std::size_t k = keep.size(), th = k;
  std::vector<long> idx(s.size(), -1);
  for (std::size_t i = 0; i < k; ++i) idx[keep[i]] = static_cast<long>(i);
  std::vector<std::vector<std::size_t>> t(k + 1, std::vector<std::size_t>(k + 1, th));
  std::vector<std::string> labels(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = s.label(keep[i]);
    for (std::size_t j = 0; j < k; ++j) {
      long v = idx[s.mul(keep[i], keep[j])];
      t[i][j] = v < 0 ? th : static_cast<std::size_t>(v);
    }
  }
  labels[th] = "0";
  SubSemigroup out{FiniteSemigroup(std::move(t), th, std::move(labels)), {}};
  for (auto x : keep) out.original_index.push_back(static_cast<long>(x));
  out.original_index.push_back(adjoin_theta || !old_zero ? -1 : static_cast<long>(*old_zero));
  return out;
}

} // namespace

SubSemigroup support_closure(const FiniteSemigroup &s, const std::vector<std::size_t> &supp) {
  if (supp.empty()) throw Error("support_closure needs a nonempty support");
  std::vector<bool> in(s.size(), false);
  std::vector<std::size_t> frontier;
  for (auto x : supp) {
    if (x >= s.size()) throw Error("support element out of range");
    if (!in[x]) in[x] = true, frontier.push_back(x);
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (!in[a]) continue;
      for (auto b : frontier) {
        for (std::size_t c : {s.mul(a, b), s.mul(b, a)})
          if (!in[c]) in[c] = true, next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::size_t> keep;
  bool has_zero = false;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!in[a]) continue;
    if (s.is_zero(a)) has_zero = true;
    else keep.push_back(a);
  }
  return induced(s, keep, !has_zero, s.zero());
}

SubSemigroup rees_quotient(const FiniteSemigroup &s, const std::vector<bool> &ideal) {
  if (ideal.size() != s.size()) throw Error("ideal indicator size mismatch");
  if (s.zero() && !ideal[*s.zero()]) throw Error("ideal must contain the zero");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t x = 0; x < s.size(); ++x)
      if (ideal[a] && (!ideal[s.mul(a, x)] || !ideal[s.mul(x, a)]))
        throw Error("not an ideal");
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < s.size(); ++a)
    if (!ideal[a]) keep.push_back(a);
  bool zero_only = s.zero() && std::count(ideal.begin(), ideal.end(), true) == 1;
  return induced(s, keep, !zero_only, s.zero());
}

} // namespace gpi
