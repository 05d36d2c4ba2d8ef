#include "gpi/subspace.hpp"

namespace gpi {

Subspace Subspace::span(std::size_t ambient, Field f, std::vector<Vec> vs) {
  Subspace s(ambient, f);
  for (const auto &v : vs)
    if (v.size() != ambient) throw Error("dimension mismatch");
  s.pivots_ = rref(vs);
  s.basis_ = std::move(vs);
  return s;
}

Subspace Subspace::full(std::size_t ambient, Field f) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(ambient, i, f));
  return span(ambient, f, std::move(vs));
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) ++p;
    else out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(const Vec &v) const {
  if (v.size() != ambient_) throw Error("dimension mismatch");
  Vec r(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Subspace &o) const {
  for (const auto &v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec &v) const {
  if (!contains(v)) throw Error("vector outside subspace");
  Vec c;
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::operator==(const Subspace &o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace operator+(const Subspace &a, const Subspace &b) {
  std::vector<Vec> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), a.field(), std::move(vs));
}

Subspace intersect(const Subspace &a, const Subspace &b) {
  // solve sum x_i a_i = sum y_j b_j
  std::size_t n = a.ambient(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(n, a.field());
  Mat m(n, da + db, a.field());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m.at(r, da + j) = -b.basis()[j][r];
  std::vector<Vec> out;
  for (const auto &k : kernel_basis(m)) {
    Vec v = zero_vec(n, a.field());
    for (std::size_t i = 0; i < da; ++i) axpy(v, k[i], a.basis()[i]);
    out.push_back(std::move(v));
  }
  return Subspace::span(n, a.field(), std::move(out));
}

bool is_direct(const std::vector<Subspace> &parts) {
  if (parts.empty()) return true;
  Subspace sum(parts[0].ambient(), parts[0].field());
  std::size_t total = 0;
  for (const auto &p : parts) {
    sum = sum + p;
    total += p.dim();
  }
  return sum.dim() == total;
}

std::optional<std::vector<Vec>> split_along(const std::vector<Subspace> &parts, const Vec &v) {
  std::vector<Vec> span;
  for (const auto &p : parts) span.insert(span.end(), p.basis().begin(), p.basis().end());
  if (!is_direct(parts)) throw Error("split_along needs a direct sum");
  auto c = solve_or_member(span, v);
  if (!c) return std::nullopt;
  std::vector<Vec> out;
  std::size_t off = 0;
  Field f = field_of(v, parts.empty() ? Field{} : parts[0].field());
  for (const auto &p : parts) {
    Vec w = zero_vec(v.size(), f);
    for (std::size_t i = 0; i < p.dim(); ++i) axpy(w, (*c)[off + i], p.basis()[i]);
    off += p.dim();
    out.push_back(std::move(w));
  }
  return out;
}

Subspace image(const Mat &m, const Subspace &s) {
  std::vector<Vec> vs;
  for (const auto &v : s.basis()) vs.push_back(m.apply(v));
  return Subspace::span(m.rows(), m.field(), std::move(vs));
}

} // namespace gpi

namespace gpi {

BasisCoords::BasisCoords(std::vector<Vec> basis, std::size_t ambient, Field f)
    : n_(basis.size()), ambient_(ambient), field_(f) {
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < n_; ++i) {
    if (basis[i].size() != ambient) throw Error("dimension mismatch");
    Vec r = basis[i];
    Vec t = unit_vec(n_, i, f);
    r.insert(r.end(), t.begin(), t.end());
    aug.push_back(std::move(r));
  }
  auto piv = rref(aug);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= ambient) throw Error("family is not independent");
    rows_.emplace_back(aug[r].begin(), aug[r].begin() + ambient);
    trans_.emplace_back(aug[r].begin() + ambient, aug[r].end());
    piv_.push_back(piv[r]);
  }
  if (piv_.size() != n_) throw Error("family is not independent");
}

std::optional<Vec> BasisCoords::coords(const Vec &v) const {
  if (v.size() != ambient_) throw Error("dimension mismatch");
  Vec c = zero_vec(n_, field_);
  Vec rest(v);
  for (std::size_t p = 0; p < piv_.size(); ++p) {
    Scalar x = rest[piv_[p]];
    if (x.is_zero()) continue;
    axpy(rest, -x, rows_[p]);
    axpy(c, x, trans_[p]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

} // namespace gpi
