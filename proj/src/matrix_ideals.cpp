#include <algorithm>
#include <random>

#include "detail.hpp"
#include "gpi/algebra.hpp"

namespace gpi {

Subspace ann_duality(std::size_t k, const Subspace &w) {
  Field f = w.field();
  // a w = 0: row r of a dotted with w
  Mat eq(w.dim() * k, k * k, f);
  for (std::size_t t = 0; t < w.dim(); ++t)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) eq.at(t * k + r, r * k + c) = w.basis()[t][c];
  return Subspace::span(k * k, f, kernel_basis(eq));
}

Subspace ann_duality_inverse(std::size_t k, const Subspace &i) {
  Field f = i.field();
  std::vector<Vec> rows;
  for (const auto &a : i.basis())
    for (std::size_t r = 0; r < k; ++r) rows.emplace_back(a.begin() + r * k, a.begin() + (r + 1) * k);
  return Subspace::span(k, f, kernel_basis(Mat::from_rows(rows, k, f)));
}

Subspace right_ann(std::size_t k, const Subspace &u) {
  Field f = u.field();
  // u a = 0: u dotted with column c of a
  Mat eq(u.dim() * k, k * k, f);
  for (std::size_t t = 0; t < u.dim(); ++t)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) eq.at(t * k + c, r * k + c) = u.basis()[t][r];
  return Subspace::span(k * k, f, kernel_basis(eq));
}

namespace {

bool closed_under_units(std::size_t k, const Subspace &i, bool left) {
  Field f = i.field();
  for (const auto &a : i.basis()) {
    Mat am = vec_to_matrix(a, k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        Mat e(k, k, f);
        e.at(p, q) = Scalar::one(f);
        if (!i.contains(matrix_to_vec(left ? e * am : am * e))) return false;
      }
  }
  return true;
}

} // namespace

bool is_left_ideal(std::size_t k, const Subspace &i) { return closed_under_units(k, i, true); }
bool is_right_ideal(std::size_t k, const Subspace &i) { return closed_under_units(k, i, false); }

Mat simultaneous_column_form(std::size_t k, const std::vector<Subspace> &ideals) {
  Field f = ideals.empty() ? Field{} : ideals[0].field();
  if (ideals.empty()) return Mat::identity(k, f);
  Subspace sum(k * k, f);
  for (const auto &i : ideals) {
    if (!is_left_ideal(k, i) || i.dim() % k) throw Error("not a left ideal of the expected dimension");
    sum = sum + i;
  }
  if (!is_direct(ideals) || sum.dim() != k * k) throw Error("non-direct sum");
  std::vector<Subspace> w;
  for (const auto &i : ideals) w.push_back(ann_duality_inverse(k, i));
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < ideals.size(); ++t) {
    Subspace v = Subspace::full(k, f);
    for (std::size_t l = 0; l < ideals.size(); ++l)
      if (l != t) v = intersect(v, w[l]);
    if (v.dim() != ideals[t].dim() / k) throw Error("non-direct sum");
    cols.insert(cols.end(), v.basis().begin(), v.basis().end());
  }
  Mat p = Mat::from_columns(cols, k, f);
  if (rank(p) != k) throw Error("non-direct sum");
  return p;
}

Subspace left_ideal_of_row(std::size_t k, const Vec &row) {
  Field f = field_of(row, Field{});
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < k; ++i) {
    Vec v = zero_vec(k * k, f);
    for (std::size_t j = 0; j < k; ++j) v[i * k + j] = row[j];
    vs.push_back(std::move(v));
  }
  return Subspace::span(k * k, f, std::move(vs));
}

Vec minimal_left_ideal_row(const Subspace &i, std::size_t k) {
  if (i.dim() != k || !is_left_ideal(k, i)) throw Error("not a minimal left ideal");
  for (const auto &a : i.basis())
    for (std::size_t r = 0; r < k; ++r) {
      Vec row(a.begin() + r * k, a.begin() + (r + 1) * k);
      if (is_zero(row)) continue;
      auto lead = std::find_if(row.begin(), row.end(), [](const Scalar &s) { return !s.is_zero(); });
      row = scale(lead->inverse(), row);
      if (left_ideal_of_row(k, row) != i) throw Error("not a minimal left ideal");
      return row;
    }
  throw Error("not a minimal left ideal");
}

namespace {

bool is_left_ideal_of(const Algebra &q, const Subspace &l) {
  for (std::size_t b = 0; b < q.dim(); ++b)
    for (const auto &v : l.basis())
      if (!l.contains(q.mul(q.basis_vec(b), v))) return false;
  return true;
}

Subspace left_times(const Algebra &q, const Subspace &l, const Vec &y) {
  std::vector<Vec> vs;
  for (const auto &v : l.basis()) vs.push_back(q.mul(v, y));
  return Subspace::span(q.dim(), q.field(), std::move(vs));
}

// Shrinks L by L <- L y over a structured candidate list until dim L = k.
Subspace find_minimal_left_ideal(const Algebra &q, const Vec &one, std::size_t k, Subspace start) {
  std::vector<Vec> cand;
  for (std::size_t b = 0; b < q.dim(); ++b) cand.push_back(q.basis_vec(b));
  for (std::size_t b = 0; b < q.dim(); ++b) {
    Vec z = q.basis_vec(b);
    auto mp = detail::minimal_polynomial(q, z, one);
    for (const auto &c : detail::roots_in_field(mp, q.field()))
      cand.push_back(detail::poly_eval(q, detail::divide_linear(mp, c), z, one));
  }
  std::mt19937_64 rng(11);
  Subspace l = std::move(start);
  for (int round = 0; round < 64 && l.dim() > k; ++round) {
    bool shrunk = false;
    std::vector<Vec> local = cand;
    local.insert(local.end(), l.basis().begin(), l.basis().end());
    for (const auto &y : local) {
      Subspace t = left_times(q, l, y);
      if (t.dim() > 0 && t.dim() < l.dim()) {
        l = std::move(t);
        shrunk = true;
        break;
      }
    }
    if (!shrunk) {
      // small random combinations of the current ideal
      Vec y = q.zero();
      for (const auto &v : l.basis()) axpy(y, Scalar::from(Rational(static_cast<long>(rng() % 5) - 2), q.field()), v);
      Subspace t = left_times(q, l, y);
      if (t.dim() > 0 && t.dim() < l.dim()) l = std::move(t);
    }
  }
  if (l.dim() != k) throw Error("could not find a minimal left ideal");
  return l;
}

} // namespace

SplitIso split_iso_to_matrix(const Algebra &q, const std::vector<Subspace> &distinguished) {
  Field f = q.field();
  auto one = unit_element(q);
  if (!one || center(q).dim() != 1) throw Error("non-split or non-simple");
  std::size_t k = 0;
  while ((k + 1) * (k + 1) <= q.dim()) ++k;
  if (k * k != q.dim() || k == 0) throw Error("dimension of the quotient is not a square");
  if (jacobson_radical(q).dim() != 0) throw Error("non-split or non-simple");
  for (const auto &d : distinguished)
    if (d.ambient() != q.dim() || !is_left_ideal_of(q, d)) throw Error("distinguished ideal is not a left ideal");

  SplitIso out;
  out.k = k;
  Subspace l = distinguished.size() == 1 && distinguished[0].dim() == k
                   ? distinguished[0]
                   : find_minimal_left_ideal(q, *one, k, Subspace::full(q.dim(), f));
  const auto &lb = l.basis();
  auto psi0 = [&](const Vec &x) {
    Mat m(k, k, f);
    for (std::size_t c = 0; c < k; ++c) {
      Vec y = l.coordinates(q.mul(x, lb[c]));
      for (std::size_t r = 0; r < k; ++r) m.at(r, c) = y[r];
    }
    return m;
  };
  Mat p = Mat::identity(k, f);
  if (distinguished.size() == 1) {
    std::vector<Vec> imgs;
    for (const auto &v : distinguished[0].basis()) imgs.push_back(matrix_to_vec(psi0(v)));
    Subspace img = Subspace::span(k * k, f, imgs);
    if (img.dim() != k) throw Error("distinguished ideal is not minimal");
    Subspace w = ann_duality_inverse(k, img);
    std::vector<Vec> cols;
    for (std::size_t e = 0; e < k && cols.empty(); ++e) {
      Vec u = unit_vec(k, e, f);
      if (!w.contains(u)) cols.push_back(u);
    }
    cols.insert(cols.end(), w.basis().begin(), w.basis().end());
    p = Mat::from_columns(cols, k, f);
  } else if (distinguished.size() > 1) {
    std::vector<Subspace> imgs;
    for (const auto &d : distinguished) {
      std::vector<Vec> vs;
      for (const auto &v : d.basis()) vs.push_back(matrix_to_vec(psi0(v)));
      imgs.push_back(Subspace::span(k * k, f, vs));
    }
    p = simultaneous_column_form(k, imgs);
  }
  Mat pinv = inverse(p);
  out.psi = Mat(k * k, q.dim(), f);
  for (std::size_t b = 0; b < q.dim(); ++b) {
    Vec v = matrix_to_vec(pinv * psi0(q.basis_vec(b)) * p);
    for (std::size_t r = 0; r < k * k; ++r) out.psi.at(r, b) = v[r];
  }
  for (std::size_t x = 0; x < q.dim(); ++x)
    for (std::size_t y = 0; y < q.dim(); ++y) {
      Mat lhs = vec_to_matrix(out.apply(q.product(x, y)), k);
      Mat rhs = vec_to_matrix(out.psi.col(x), k) * vec_to_matrix(out.psi.col(y), k);
      if (!(lhs == rhs)) throw Error("internal: psi is not multiplicative");
    }
  out.psi_inv = inverse(out.psi);
  return out;
}

bool graded_iso_check(const GradedAlgebra &a1, const GradedAlgebra &a2, const Mat &match) {
  if (!(a1.semigroup() == a2.semigroup()) || a1.dim() != a2.dim() || a1.field() != a2.field()) return false;
  Field f = a1.field();
  Quotient q1 = radical_quotient(a1.algebra()), q2 = radical_quotient(a2.algebra());
  if (match.rows() != q2.q.dim() || match.cols() != q1.q.dim()) throw Error("quotient map has the wrong shape");
  Mat pr1 = q1.projection(), pr2 = q2.projection();
  std::size_t d = a1.dim();
  Mat phi(d, d, f);
  for (std::size_t t = 0; t < a1.semigroup().size(); ++t) {
    auto c1 = a1.component(t), c2 = a2.component(t);
    if (c1.size() != c2.size()) return false;
    if (c1.empty()) continue;
    std::vector<Vec> img2;
    for (auto b : c2) img2.push_back(pr2.col(b));
    BasisCoords back(img2, q2.q.dim(), f);
    if (back.size() != c2.size()) throw Error("component of the second algebra meets its radical");
    for (auto b : c1) {
      auto co = back.coords(match.apply(pr1.col(b)));
      if (!co) throw Error("quotient map is not component-compatible");
      for (std::size_t l = 0; l < c2.size(); ++l) phi.at(c2[l], b) = (*co)[l];
    }
  }
  if (rank(phi) != d) return false;
  const Algebra &x = a1.algebra(), &y = a2.algebra();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (phi.apply(x.product(i, j)) != y.mul(phi.col(i), phi.col(j))) return false;
  return true;
}

} // namespace gpi
