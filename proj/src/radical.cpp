#include <algorithm>
#include <random>

#include "detail.hpp"
#include "gpi/algebra.hpp"

namespace gpi {

Subspace products_span(const Algebra &a, const Subspace &x, const Subspace &y) {
  std::vector<Vec> vs;
  for (const auto &u : x.basis())
    for (const auto &v : y.basis()) vs.push_back(a.mul(u, v));
  return Subspace::span(a.dim(), a.field(), std::move(vs));
}

Subspace jacobson_radical(const Algebra &a) {
  std::size_t d = a.dim();
  Field f = a.field();
  if (!f.is_rational() && f.p <= d)
    throw Error("radical requires characteristic 0 or p > dim");
  // trace form tr(L_x L_y) = sum_{i,k} c_{xi}^k c_{yk}^i
  Mat t(d, d, f);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t i = 0; i < d; ++i)
      for (const auto &[k, c] : a.sparse(x, i))
        for (std::size_t y = 0; y < d; ++y) {
          const Scalar &e = a.coeff(y, k, i);
          if (!e.is_zero()) t.at(x, y) += c * e;
        }
  Subspace j = Subspace::span(d, f, kernel_basis(t));
  Subspace power = j;
  for (std::size_t s = 0; s <= d + 1 && power.dim() > 0; ++s) power = products_span(a, power, j);
  if (power.dim() > 0) throw Error("internal: trace-form radical is not nilpotent");
  return j;
}

bool homogeneous_components_meet_radical(const GradedAlgebra &a) {
  Subspace j = jacobson_radical(a);
  for (auto t : a.support())
    if (intersect(a.component_space(t), j).dim() > 0) return false;
  return true;
}

Vec Quotient::project(const Vec &a) const {
  Vec r = radical.reduce(a);
  Vec x;
  x.reserve(lift.size());
  for (auto i : lift) x.push_back(r[i]);
  return x;
}

Vec Quotient::lift_vec(const Vec &x) const {
  Vec v = zero_vec(radical.ambient(), radical.field());
  for (std::size_t i = 0; i < lift.size(); ++i) v[lift[i]] = x[i];
  return v;
}

Mat Quotient::projection() const {
  std::size_t d = radical.ambient();
  Mat m(lift.size(), d, radical.field());
  for (std::size_t c = 0; c < d; ++c) {
    Vec x = project(unit_vec(d, c, radical.field()));
    for (std::size_t r = 0; r < lift.size(); ++r) m.at(r, c) = x[r];
  }
  return m;
}

Quotient radical_quotient(const Algebra &a, const Subspace &j) {
  Quotient out;
  out.radical = j;
  out.lift = j.non_pivots();
  std::size_t r = out.lift.size();
  out.q = Algebra(a.field(), r);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      out.q.set_product(x, y, out.project(a.product(out.lift[x], out.lift[y])));
  return out;
}

std::optional<Vec> unit_element(const Algebra &a) {
  std::size_t d = a.dim();
  Field f = a.field();
  if (d == 0) return Vec{};
  // u b_j = b_j and b_j u = b_j, linear in u
  std::vector<Vec> cols(d, zero_vec(2 * d * d, f));
  Vec target = zero_vec(2 * d * d, f);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      if (j == k) target[j * d + k] = target[d * d + j * d + k] = Scalar::one(f);
      for (std::size_t i = 0; i < d; ++i) {
        cols[i][j * d + k] = a.coeff(i, j, k);
        cols[i][d * d + j * d + k] = a.coeff(j, i, k);
      }
    }
  return solve_or_member(cols, target);
}

Subspace center(const Algebra &a) {
  std::size_t d = a.dim();
  Mat m(d * d, d, a.field());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) m.at(j * d + k, i) = a.coeff(i, j, k) - a.coeff(j, i, k);
  return Subspace::span(d, a.field(), kernel_basis(m));
}

Subspace left_annihilator(const Algebra &a) {
  std::size_t d = a.dim();
  Mat m(d * d, d, a.field());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) m.at(j * d + k, i) = a.coeff(i, j, k);
  return Subspace::span(d, a.field(), kernel_basis(m));
}

Subspace right_annihilator(const Algebra &a) {
  std::size_t d = a.dim();
  Mat m(d * d, d, a.field());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) m.at(j * d + k, i) = a.coeff(j, i, k);
  return Subspace::span(d, a.field(), kernel_basis(m));
}

bool is_idempotent(const Algebra &a, const Vec &e) { return a.mul(e, e) == e; }

namespace detail {

std::vector<Scalar> minimal_polynomial(const Algebra &a, const Vec &z, const Vec &one) {
  std::vector<Vec> powers{one};
  for (;;) {
    Vec next = a.mul(powers.back(), z);
    auto c = solve_or_member(powers, next);
    if (c) {
      std::vector<Scalar> poly;
      for (auto &x : *c) poly.push_back(-x);
      poly.push_back(Scalar::one(a.field()));
      return poly;
    }
    powers.push_back(std::move(next));
    if (powers.size() > a.dim() + 1) throw Error("internal: minimal polynomial too long");
  }
}

Scalar poly_eval(const std::vector<Scalar> &poly, const Scalar &x) {
  Scalar r = poly.empty() ? Scalar(0) : poly.back() * Scalar(0);
  for (std::size_t i = poly.size(); i-- > 0;) r = r * x + poly[i];
  return r;
}

Vec poly_eval(const Algebra &a, const std::vector<Scalar> &poly, const Vec &z, const Vec &one) {
  Vec r = a.zero();
  for (std::size_t i = poly.size(); i-- > 0;) {
    r = a.mul(r, z);
    axpy(r, poly[i], one);
  }
  return r;
}

std::vector<Scalar> divide_linear(const std::vector<Scalar> &poly, const Scalar &c) {
  // synthetic division by (x - c)
  std::size_t n = poly.size();
  std::vector<Scalar> q(n - 1);
  Scalar carry = poly[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    q[i] = carry;
    carry = poly[i] + carry * c;
  }
  return q;
}

namespace {

std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  if (v == 0 || v > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

} // namespace

std::vector<Scalar> roots_in_field(const std::vector<Scalar> &poly, Field f) {
  std::vector<Scalar> roots;
  if (poly.size() < 2) return roots;
  if (!f.is_rational()) {
    if (f.p > 100000) return roots;
    for (std::uint64_t x = 0; x < f.p; ++x)
      if (poly_eval(poly, Scalar::residue(x, f.p)).is_zero()) roots.push_back(Scalar::residue(x, f.p));
    return roots;
  }
  Integer l = 1;
  for (const auto &c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<Integer> ip;
  for (const auto &c : poly) ip.push_back(Integer(c.rational() * l));
  std::size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  if (low + 1 >= ip.size()) return roots;
  for (const auto &pn : divisors(ip[low]))
    for (const auto &qd : divisors(ip.back()))
      for (int s : {1, -1}) {
        Scalar x(Rational(pn * s, qd));
        if (poly_eval(poly, x).is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end(),
            [](const Scalar &a, const Scalar &b) { return a.rational() < b.rational(); });
  return roots;
}

} // namespace detail

std::optional<Vec> central_idempotent(const Algebra &a) {
  auto one = unit_element(a);
  if (!one || a.dim() < 2) return std::nullopt;
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < a.dim(); ++i) candidates.push_back(a.basis_vec(i));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Vec v = a.zero();
    for (auto &x : v) x = Scalar::from(Rational(static_cast<long>(rng() % 7) - 3), a.field());
    candidates.push_back(v);
  }
  for (const auto &z : candidates) {
    auto m = detail::minimal_polynomial(a, z, *one);
    if (m.size() <= 2) continue;
    for (const auto &c : detail::roots_in_field(m, a.field())) {
      auto g = detail::divide_linear(m, c);
      Scalar gc = detail::poly_eval(g, c);
      if (gc.is_zero()) continue; // repeated root, not semisimple along z
      Vec e = scale(gc.inverse(), detail::poly_eval(a, g, z, *one));
      if (is_idempotent(a, e) && !is_zero(e) && e != *one) return e;
    }
  }
  return std::nullopt;
}

} // namespace gpi
