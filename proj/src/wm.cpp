#include <algorithm>

#include "gpi/algebra.hpp"

namespace gpi {

// --- Peirce helpers --------------------------------------------------------

namespace {

// e in U with u_l e = u_l (right) or e u_l = u_l (left) for every basis vector.
std::optional<Vec> unit_of(const Algebra &a, const Subspace &u, bool right) {
  const auto &bs = u.basis();
  std::size_t d = a.dim();
  std::vector<Vec> cols;
  Vec target;
  for (const auto &m : bs) target.insert(target.end(), m.begin(), m.end());
  for (const auto &l : bs) {
    Vec c;
    for (const auto &m : bs) {
      Vec p = right ? a.mul(m, l) : a.mul(l, m);
      c.insert(c.end(), p.begin(), p.end());
    }
    cols.push_back(std::move(c));
  }
  if (bs.empty()) return a.zero();
  auto sol = solve_or_member(cols, target);
  if (!sol) return std::nullopt;
  Vec e = zero_vec(d, a.field());
  for (std::size_t l = 0; l < bs.size(); ++l) axpy(e, (*sol)[l], bs[l]);
  return e;
}

} // namespace

Vec right_unit_of(const Algebra &a, const Subspace &u) {
  auto e = unit_of(a, u, true);
  if (!e) throw Error("left ideal has no right unit");
  return *e;
}

Vec left_unit_of(const Algebra &a, const Subspace &u) {
  auto e = unit_of(a, u, false);
  if (!e) throw Error("right ideal has no left unit");
  return *e;
}

Subspace times_right(const Algebra &a, const Subspace &x, const Vec &r) {
  std::vector<Vec> vs;
  for (const auto &v : x.basis()) vs.push_back(a.mul(v, r));
  return Subspace::span(a.dim(), a.field(), std::move(vs));
}

Subspace times_left(const Algebra &a, const Vec &l, const Subspace &x) {
  std::vector<Vec> vs;
  for (const auto &v : x.basis()) vs.push_back(a.mul(l, v));
  return Subspace::span(a.dim(), a.field(), std::move(vs));
}

Subspace times_one_minus_right(const Algebra &a, const Subspace &x, const Vec &r) {
  std::vector<Vec> vs;
  for (const auto &v : x.basis()) vs.push_back(sub(v, a.mul(v, r)));
  return Subspace::span(a.dim(), a.field(), std::move(vs));
}

Subspace times_one_minus_left(const Algebra &a, const Vec &l, const Subspace &x) {
  std::vector<Vec> vs;
  for (const auto &v : x.basis()) vs.push_back(sub(v, a.mul(l, v)));
  return Subspace::span(a.dim(), a.field(), std::move(vs));
}

// --- decomposition ---------------------------------------------------------

namespace {

struct Cells {
  std::vector<Subspace> cols, rows; // L_j, R_i
  std::vector<std::vector<Subspace>> block; // A_ij
};

Cells cells_of(const GradedAlgebra &a, const ReducedGrading &red) {
  Cells c;
  std::size_t n = red.pres.n, m = red.pres.m, d = a.dim();
  Field f = a.field();
  std::vector<std::vector<Vec>> cv(m), rv(n);
  std::vector<std::vector<std::vector<Vec>>> bv(n, std::vector<std::vector<Vec>>(m));
  for (std::size_t b = 0; b < d; ++b) {
    auto [i, j] = red.cell[b];
    Vec e = unit_vec(d, b, f);
    cv[j].push_back(e);
    rv[i].push_back(e);
    bv[i][j].push_back(e);
  }
  for (auto &v : cv) c.cols.push_back(Subspace::span(d, f, v));
  for (auto &v : rv) c.rows.push_back(Subspace::span(d, f, v));
  c.block.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) c.block[i].push_back(Subspace::span(d, f, bv[i][j]));
  return c;
}

} // namespace

std::vector<Subspace> ideal_complements(const Algebra &q, const std::vector<Subspace> &bars, bool left_ideals) {
  std::vector<Subspace> out;
  Subspace acc(q.dim(), q.field());
  for (const auto &v : bars) {
    Subspace meet = intersect(v, acc);
    if (meet.dim() == 0) {
      out.push_back(v);
    } else if (left_ideals) {
      out.push_back(times_one_minus_right(q, v, right_unit_of(q, meet)));
    } else {
      out.push_back(times_one_minus_left(q, left_unit_of(q, meet), v));
    }
    acc = acc + v;
  }
  return out;
}

namespace {

Vec lift_idempotent(const Algebra &a, const Quotient &quo, const Subspace &inside, const Vec &target) {
  Mat pr = quo.projection();
  std::vector<Vec> cols;
  for (const auto &b : inside.basis()) cols.push_back(pr.apply(b));
  auto c = solve_or_member(cols, target);
  if (!c) throw Error("internal: idempotent has no preimage in its ideal");
  Vec e = a.zero();
  for (std::size_t i = 0; i < cols.size(); ++i) axpy(e, (*c)[i], inside.basis()[i]);
  for (std::size_t it = 0; it <= a.dim() + 2; ++it) {
    Vec e2 = a.mul(e, e);
    if (e2 == e) return e;
    Vec e3 = a.mul(e2, e);
    Vec next = scale(Scalar(3), e2);
    axpy(next, Scalar(-2), e3);
    e = std::move(next);
  }
  throw Error("internal: idempotent lifting did not converge");
}

std::string check_family(const Algebra &a, const std::vector<Vec> &fam, const Vec &one,
                         const std::vector<Subspace> &homes, const char *name) {
  Vec sum = a.zero();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    sum = add(sum, fam[i]);
    if (!is_idempotent(a, fam[i])) return std::string(name) + " is not idempotent";
    if (!homes[i].contains(fam[i])) return std::string(name) + " leaves its one-sided ideal";
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j && !is_zero(a.mul(fam[i], fam[j]))) return std::string(name) + " family is not orthogonal";
  }
  if (sum != one) return std::string(name) + " family does not sum to 1_B";
  return {};
}

} // namespace

WMResult wm_graded_decomposition(const GradedAlgebra &ga) {
  WMResult out;
  const Algebra &a = ga.algebra();
  auto fail = [&](const std::string &why) {
    out.failure = "no graded decomposition found: " + why;
    return out;
  };
  ReducedGrading red = reduce_grading(ga);
  if (red.status != ReducedGrading::ok) return fail(red.note);
  Subspace j = jacobson_radical(a);
  Quotient quo = radical_quotient(a, j);
  const Algebra &q = quo.q;
  auto one_q = unit_element(q);
  if (!one_q) return fail("A/J(A) has no unit");
  Cells cells = cells_of(ga, red);
  Mat pr = quo.projection();

  auto lift_family = [&](const std::vector<Subspace> &ideals, bool left) -> std::optional<std::vector<Vec>> {
    std::vector<Subspace> bars;
    for (const auto &s : ideals) bars.push_back(image(pr, s));
    auto tildes = ideal_complements(q, bars, left);
    if (!is_direct(tildes)) return std::nullopt;
    auto parts = split_along(tildes, *one_q);
    if (!parts) return std::nullopt;
    std::vector<Vec> lifted;
    for (std::size_t i = 0; i < ideals.size(); ++i)
      lifted.push_back(is_zero((*parts)[i]) ? a.zero() : lift_idempotent(a, quo, ideals[i], (*parts)[i]));
    return lifted;
  };
  auto omega = lift_family(cells.cols, true);
  auto omega_p = lift_family(cells.rows, false);
  if (!omega || !omega_p) return fail("1 of A/J(A) does not split along the images of L_j, R_i");

  std::size_t n = red.pres.n, m = red.pres.m;
  std::vector<std::vector<Vec>> bcol(m), brow(n);
  std::vector<Vec> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < m; ++jj)
      for (std::size_t b = 0; b < a.dim(); ++b) {
        Vec v = a.mul(a.mul((*omega_p)[i], a.basis_vec(b)), (*omega)[jj]);
        bcol[jj].push_back(v);
        brow[i].push_back(v);
        all.push_back(std::move(v));
      }
  Subspace B = Subspace::span(a.dim(), a.field(), all);
  if (intersect(B, j).dim() > 0) return fail("B ∩ J(A) != 0");
  if (B.dim() + j.dim() != a.dim()) return fail("A != B + J(A)");
  if (!B.contains(products_span(a, B, B))) return fail("B is not closed under multiplication");
  auto one_b = unit_of(a, B, true);
  if (!one_b || unit_of(a, B, false) != one_b) return fail("B has no unit");

  std::vector<Subspace> bc, br;
  for (auto &v : bcol) bc.push_back(Subspace::span(a.dim(), a.field(), v));
  for (auto &v : brow) br.push_back(Subspace::span(a.dim(), a.field(), v));
  if (!is_direct(bc) || !is_direct(br)) return fail("B is not the direct sum of its column/row parts");
  auto fs = split_along(bc, *one_b);
  auto fps = split_along(br, *one_b);
  if (!fs || !fps) return fail("1_B does not split along the Peirce parts");

  if (auto e = check_family(a, *fs, *one_b, cells.cols, "f_j"); !e.empty()) return fail(e);
  if (auto e = check_family(a, *fps, *one_b, cells.rows, "f'_i"); !e.empty()) return fail(e);
  std::vector<Subspace> peirce;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < m; ++jj) {
      std::vector<Vec> vs;
      for (std::size_t b = 0; b < a.dim(); ++b)
        vs.push_back(a.mul(a.mul((*fps)[i], a.basis_vec(b)), (*fs)[jj]));
      Subspace p = Subspace::span(a.dim(), a.field(), vs);
      if (!cells.block[i][jj].contains(p)) return fail("f'_i A f_j leaves A_ij");
      peirce.push_back(std::move(p));
    }
  Subspace psum(a.dim(), a.field());
  for (const auto &p : peirce) psum = psum + p;
  if (!is_direct(peirce) || psum != B) return fail("B != sum of f'_i A f_j");

  WMDecomposition d;
  d.B = std::move(B);
  d.unit_of_B = *one_b;
  d.row_idempotents = std::move(*fps);
  d.column_idempotents = std::move(*fs);
  d.radical = std::move(j);
  d.grading = std::move(red);
  out.decomposition = std::move(d);
  return out;
}

// --- layers of the radical -------------------------------------------------

namespace {

struct PhiMap {
  std::vector<Vec> src, dst;
  std::optional<Vec> apply(const Vec &v) const {
    auto c = solve_or_member(src, v);
    if (!c) return std::nullopt;
    Vec out = zero_vec(v.size(), field_of(v, Field{}));
    for (std::size_t i = 0; i < src.size(); ++i) axpy(out, (*c)[i], dst[i]);
    return out;
  }
};

std::vector<Vec> concat_pairs(const std::vector<Vec> &x, const std::vector<Vec> &y) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vec v = x[i];
    v.insert(v.end(), y[i].begin(), y[i].end());
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t span_dim(std::size_t ambient, Field f, std::vector<Vec> vs) {
  return Subspace::span(ambient, f, std::move(vs)).dim();
}

} // namespace

LayerReport radical_square_layers(const GradedAlgebra &ga, const WMDecomposition &d) {
  LayerReport r;
  const Algebra &a = ga.algebra();
  std::size_t dim = a.dim();
  Field f = a.field();
  const auto &red = d.grading;
  std::size_t n = red.pres.n, m = red.pres.m;
  const Vec &one = d.unit_of_B;
  const auto &fp = d.row_idempotents;
  const auto &fc = d.column_idempotents;
  Cells cells = cells_of(ga, red);
  r.radical_dim = d.radical.dim();
  r.b_dim = d.B.dim();
  auto fail = [&](const std::string &why) {
    r.ok = false;
    r.failure = why;
    return r;
  };

  // generating pairs (v, phi v) per layer
  std::vector<std::vector<Vec>> v10(m), p10(m), v01(n), p01(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto &b : cells.block[i][j].basis()) {
        Vec x = a.mul(fp[i], b); // in f'_i A_ij
        Vec x1 = a.mul(x, one);
        v10[j].push_back(sub(x, x1));
        p10[j].push_back(sub(x1, a.mul(x, fc[j])));
        Vec y = a.mul(b, fc[j]); // in A_ij f_j
        Vec y1 = a.mul(one, y);
        v01[i].push_back(sub(y, y1));
        p01[i].push_back(sub(y1, a.mul(fp[i], y)));
      }
  std::vector<Vec> allv, allp;
  for (std::size_t j = 0; j < m; ++j) {
    allv.insert(allv.end(), v10[j].begin(), v10[j].end());
    allp.insert(allp.end(), p10[j].begin(), p10[j].end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    allv.insert(allv.end(), v01[i].begin(), v01[i].end());
    allp.insert(allp.end(), p01[i].begin(), p01[i].end());
  }
  if (span_dim(2 * dim, f, concat_pairs(allv, allp)) != span_dim(dim, f, allv))
    return fail("phi(a - 1_B a 1_B) = 1_B a 1_B - f'_i a f_j is not well defined");
  PhiMap phi{allv, allp};

  std::vector<Subspace> j10, j01, parts;
  for (std::size_t j = 0; j < m; ++j) {
    j10.push_back(Subspace::span(dim, f, v10[j]));
    r.j10_dims.push_back(j10.back().dim());
    if (span_dim(dim, f, p10[j]) != j10.back().dim()) return fail("J10_{*j} ∩ ker phi != 0");
    for (const auto &p : p10[j])
      if (!is_zero(a.mul(p, fc[j]))) return fail("phi(J10_{*j}) f_j != 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    j01.push_back(Subspace::span(dim, f, v01[i]));
    r.j01_dims.push_back(j01.back().dim());
    if (span_dim(dim, f, p01[i]) != j01.back().dim()) return fail("J01_{i*} ∩ ker phi != 0");
    for (const auto &p : p01[i])
      if (!is_zero(a.mul(fp[i], p))) return fail("f'_i phi(J01_{i*}) != 0");
  }
  // module maps: phi(b v) = b phi(v) on J10, phi(v b) = phi(v) b on J01
  for (const auto &bb : d.B.basis()) {
    for (std::size_t j = 0; j < m; ++j)
      for (const auto &v : j10[j].basis()) {
        auto lhs = phi.apply(a.mul(bb, v));
        if (!lhs || *lhs != a.mul(bb, *phi.apply(v))) return fail("phi is not a left B-module map on J10");
      }
    for (std::size_t i = 0; i < n; ++i)
      for (const auto &v : j01[i].basis()) {
        auto lhs = phi.apply(a.mul(v, bb));
        if (!lhs || *lhs != a.mul(*phi.apply(v), bb)) return fail("phi is not a right B-module map on J01");
      }
  }

  Subspace j2 = products_span(a, d.radical, d.radical);
  r.j2_dim = j2.dim();
  parts.insert(parts.end(), j01.begin(), j01.end());
  parts.insert(parts.end(), j10.begin(), j10.end());
  parts.push_back(j2);
  Subspace total(dim, f);
  for (const auto &p : parts) total = total + p;
  if (!is_direct(parts) || total != d.radical) return fail("J(A) != sum J01 + sum J10 + J(A)^2 (direct)");

  Subspace prods(dim, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      prods = prods + products_span(a, j01[i], j10[j]);
      // sum v_l w_l = 0 iff sum phi(v_l) phi(w_l) = 0
      std::vector<Vec> vw, pp;
      for (const auto &v : j01[i].basis())
        for (const auto &w : j10[j].basis()) {
          vw.push_back(a.mul(v, w));
          pp.push_back(a.mul(*phi.apply(v), *phi.apply(w)));
        }
      if (vw.empty()) continue;
      Mat mv = Mat::from_columns(vw, dim, f), mp = Mat::from_columns(pp, dim, f);
      std::size_t rv = rank(mv), rp = rank(mp), rboth = span_dim(2 * dim, f, concat_pairs(vw, pp));
      if (rv != rp || rv != rboth) return fail("products v w and phi(v) phi(w) have different kernels");
    }
  if (prods != j2) return fail("J(A)^2 != sum J01_{i*} J10_{*j}");

  std::size_t s01 = 0, s10 = 0;
  for (auto x : r.j01_dims) s01 += x;
  for (auto x : r.j10_dims) s10 += x;
  if (s01 > (n - 1) * r.b_dim) return fail("dim sum J01 > (n-1) dim B");
  if (s10 > (m - 1) * r.b_dim) return fail("dim sum J10 > (m-1) dim B");
  if (r.radical_dim > (n * m - 1) * r.b_dim) return fail("dim J(A) > (nm-1) dim B");

  Subspace full = Subspace::full(dim, f);
  if (products_span(a, j2, full).dim() || products_span(a, full, j2).dim())
    return fail("J(A)^2 A != 0 or A J(A)^2 != 0");
  r.ok = true;
  return r;
}

} // namespace gpi
