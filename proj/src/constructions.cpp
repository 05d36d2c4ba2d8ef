#include "gpi/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace gpi {

GradedAlgebra munn_algebra(std::size_t n, std::size_t m, const Mat &p) {
  if (p.rows() != m || p.cols() != n) throw Error("sandwich must be m x n");
  p.check_field();
  Field f = p.field();
  for (std::size_t j = 0; j < m; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || !p.at(j, i).is_zero();
    if (!any) throw Error("sandwich has a zero row or column");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < m; ++j) any = any || !p.at(j, i).is_zero();
    if (!any) throw Error("sandwich has a zero row or column");
  }
  std::size_t d = n * m;
  Algebra a(f, d);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vec v = zero_vec(d, f);
          v[i * m + l] = p.at(j, k);
          a.set_product(i * m + j, k * m + l, v);
        }
    }
  std::vector<std::size_t> deg(d);
  std::iota(deg.begin(), deg.end(), 0);
  return GradedAlgebra(std::move(a), rees_semigroup(ReesPresentation::all_e(n, m)), std::move(deg),
                       std::move(names));
}

namespace {

Vec as_vec(const Mat &m) { return matrix_to_vec(m); }

bool orthogonal_family(const Algebra &mk, const std::vector<Vec> &fam, const Vec &one) {
  Vec sum = mk.zero();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!is_idempotent(mk, fam[i])) return false;
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j && !is_zero(mk.mul(fam[i], fam[j]))) return false;
    sum = add(sum, fam[i]);
  }
  return sum == one;
}

std::vector<Vec> columns(const Mat &m) {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.col(c));
  return out;
}

} // namespace

Constructed existence_construct_full(const ExistenceInput &inp) {
  std::size_t k = inp.k, n = inp.n, m = inp.m, kk = k * k;
  Field f = inp.field;
  if (k == 0 || n == 0 || m == 0) throw Error("k, n and m must be positive");
  if (inp.row_idempotents.size() != n || inp.column_idempotents.size() != m || inp.left_modules.size() != m ||
      inp.right_modules.size() != n)
    throw Error("input families have the wrong length");
  Algebra mk = matrix_algebra(k, f);
  Vec one = as_vec(Mat::identity(k, f));
  std::vector<Vec> fp, fc;
  for (const auto &x : inp.row_idempotents) fp.push_back(as_vec(x));
  for (const auto &x : inp.column_idempotents) fc.push_back(as_vec(x));
  if (!orthogonal_family(mk, fp, one)) throw Error("f'_i are not orthogonal idempotents summing to 1");
  if (!orthogonal_family(mk, fc, one)) throw Error("f_j are not orthogonal idempotents summing to 1");

  std::vector<std::vector<Vec>> phi10(m), phi01(n);
  for (std::size_t j = 0; j < m; ++j) {
    const Mat &e = inp.left_modules[j];
    if (e.rows() != kk) throw Error("embedding of J10_{*j} has the wrong row count");
    phi10[j] = columns(e);
    if (rank(e) != e.cols()) throw Error("φ on J10_{*j} is not injective");
    Subspace img = Subspace::span(kk, f, phi10[j]);
    for (std::size_t b = 0; b < kk; ++b)
      for (const auto &w : phi10[j]) {
        if (!img.contains(mk.mul(mk.basis_vec(b), w))) throw Error("φ(J10_{*j}) is not a left M_k-submodule");
      }
    for (const auto &w : phi10[j])
      if (!is_zero(mk.mul(w, fc[j]))) throw Error("φ(J10_{*j})·f_j != 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Mat &e = inp.right_modules[i];
    if (e.rows() != kk) throw Error("embedding of J01_{i*} has the wrong row count");
    phi01[i] = columns(e);
    if (rank(e) != e.cols()) throw Error("φ on J01_{i*} is not injective");
    Subspace img = Subspace::span(kk, f, phi01[i]);
    for (std::size_t b = 0; b < kk; ++b)
      for (const auto &v : phi01[i])
        if (!img.contains(mk.mul(v, mk.basis_vec(b)))) throw Error("φ(J01_{i*}) is not a right M_k-submodule");
    for (const auto &v : phi01[i])
      if (!is_zero(mk.mul(fp[i], v))) throw Error("f'_i·φ(J01_{i*}) != 0");
  }

  // J_ij: echelon basis of φ(J01_i)φ(J10_j)
  std::vector<std::vector<Subspace>> jij(n, std::vector<Subspace>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Vec> prods;
      for (const auto &v : phi01[i])
        for (const auto &w : phi10[j]) prods.push_back(mk.mul(v, w));
      jij[i][j] = Subspace::span(kk, f, prods);
    }
  std::vector<std::size_t> off01(n), off10(m);
  std::vector<std::vector<std::size_t>> offj(n, std::vector<std::size_t>(m));
  std::size_t d = kk;
  for (std::size_t i = 0; i < n; ++i) off01[i] = d, d += phi01[i].size();
  for (std::size_t j = 0; j < m; ++j) off10[j] = d, d += phi10[j].size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) offj[i][j] = d, d += jij[i][j].dim();

  std::vector<BasisCoords> c01, c10;
  for (std::size_t i = 0; i < n; ++i) c01.emplace_back(phi01[i], kk, f);
  for (std::size_t j = 0; j < m; ++j) c10.emplace_back(phi10[j], kk, f);
  auto place = [&](Vec &out, std::size_t off, const Vec &c) {
    for (std::size_t t = 0; t < c.size(); ++t) out[off + t] = c[t];
  };

  Algebra raw(f, d);
  for (std::size_t x = 0; x < kk; ++x)
    for (std::size_t y = 0; y < kk; ++y) {
      Vec v = zero_vec(d, f);
      place(v, 0, mk.product(x, y));
      raw.set_product(x, y, v);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < phi01[i].size(); ++t) {
      for (std::size_t y = 0; y < kk; ++y) { // v·b
        Vec v = zero_vec(d, f);
        place(v, off01[i], *c01[i].coords(mk.mul(phi01[i][t], mk.basis_vec(y))));
        raw.set_product(off01[i] + t, y, v);
      }
      for (std::size_t j = 0; j < m; ++j) // v·w = μ(v, w)
        for (std::size_t u = 0; u < phi10[j].size(); ++u) {
          Vec v = zero_vec(d, f);
          place(v, offj[i][j], jij[i][j].coordinates(mk.mul(phi01[i][t], phi10[j][u])));
          raw.set_product(off01[i] + t, off10[j] + u, v);
        }
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t u = 0; u < phi10[j].size(); ++u)
      for (std::size_t x = 0; x < kk; ++x) { // b·w
        Vec v = zero_vec(d, f);
        place(v, off10[j], *c10[j].coords(mk.mul(mk.basis_vec(x), phi10[j][u])));
        raw.set_product(x, off10[j] + u, v);
      }

  auto embed01 = [&](std::size_t i, const Vec &b, const Vec &c) {
    Vec v = zero_vec(d, f);
    place(v, 0, b);
    place(v, off01[i], c);
    return v;
  };
  auto embed10 = [&](std::size_t j, const Vec &b, const Vec &c) {
    Vec v = zero_vec(d, f);
    place(v, 0, b);
    place(v, off10[j], c);
    return v;
  };

  std::vector<Vec> basis;
  std::vector<std::size_t> deg;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Vec> vs;
      for (std::size_t b = 0; b < kk; ++b) {
        Vec x = zero_vec(d, f);
        place(x, 0, mk.mul(mk.mul(fp[i], mk.basis_vec(b)), fc[j]));
        vs.push_back(std::move(x));
      }
      for (const auto &v : phi01[i]) { // v f_j
        Vec pv = mk.mul(v, fc[j]);
        vs.push_back(embed01(i, pv, *c01[i].coords(pv)));
      }
      for (const auto &w : phi10[j]) { // f'_i w
        Vec pw = mk.mul(fp[i], w);
        vs.push_back(embed10(j, pw, *c10[j].coords(pw)));
      }
      for (std::size_t t = 0; t < phi01[i].size(); ++t)
        for (std::size_t u = 0; u < phi10[j].size(); ++u) {
          Vec x = embed01(i, phi01[i][t], unit_vec(phi01[i].size(), t, f));
          Vec y = embed10(j, phi10[j][u], unit_vec(phi10[j].size(), u, f));
          vs.push_back(raw.mul(x, y));
        }
      Subspace comp = Subspace::span(d, f, vs);
      for (std::size_t t = 0; t < comp.dim(); ++t) {
        basis.push_back(comp.basis()[t]);
        deg.push_back(i * m + j);
        names.push_back("A" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "." + std::to_string(t));
      }
    }
  if (basis.size() != d || BasisCoords(basis, d, f).size() != d)
    throw Error("internal: homogeneous components do not decompose A");

  Constructed out;
  out.k = k;
  out.algebra = GradedAlgebra(raw.rebased(basis), rees_semigroup(ReesPresentation::all_e(n, m)), std::move(deg),
                              std::move(names));
  out.psi = Mat(kk, d, f);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t r = 0; r < kk; ++r) out.psi.at(r, b) = basis[b][r];
  return out;
}

Constructed grading_from_decomposition(const DecompositionInput &inp) {
  std::size_t k = inp.k, n = inp.pres.n, m = inp.pres.m, kk = k * k;
  Field f = inp.field;
  if (k == 0 || n == 0 || m == 0) throw Error("k, n and m must be positive");
  if (inp.pres.sandwich.size() != m) throw Error("sandwich must be m x n");
  for (const auto &row : inp.pres.sandwich)
    if (row.size() != n) throw Error("sandwich must be m x n");
  if (inp.blocks.size() != n) throw Error("blocks must be n x m");
  for (const auto &row : inp.blocks) {
    if (row.size() != m) throw Error("blocks must be n x m");
    for (const auto &b : row)
      if (b.ambient() != kk) throw Error("block is not a subspace of M_k");
  }
  Algebra mk = matrix_algebra(k, f);
  Subspace total(kk, f);
  for (const auto &row : inp.blocks)
    for (const auto &b : row) total = total + b;
  if (total.dim() != kk) throw Error("blocks do not sum to M_k");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < m; ++r) {
          Subspace p = products_span(mk, inp.blocks[i][j], inp.blocks[l][r]);
          if (!inp.blocks[i][r].contains(p)) throw Error("B_ij B_lr is not contained in B_ir");
          if (!inp.pres.sandwich[j][l] && p.dim() > 0) throw Error("B_ij B_lr != 0 where the sandwich vanishes");
        }

  std::vector<Subspace> lbar(m, Subspace(kk, f)), rbar(n, Subspace(kk, f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      lbar[j] = lbar[j] + inp.blocks[i][j];
      rbar[i] = rbar[i] + inp.blocks[i][j];
    }
  for (const auto &l : lbar)
    if (!is_left_ideal(k, l)) throw Error("column sum of blocks is not a left ideal");
  for (const auto &r : rbar)
    if (!is_right_ideal(k, r)) throw Error("row sum of blocks is not a right ideal");
  Vec one = matrix_to_vec(Mat::identity(k, f));
  auto fcs = split_along(ideal_complements(mk, lbar, true), one);
  auto fps = split_along(ideal_complements(mk, rbar, false), one);
  if (!fcs || !fps) throw Error("internal: identity does not split along the complements");

  ExistenceInput e;
  e.k = k;
  e.n = n;
  e.m = m;
  e.field = f;
  for (std::size_t j = 0; j < m; ++j) {
    e.column_idempotents.push_back(vec_to_matrix((*fcs)[j], k));
    Subspace w = times_one_minus_right(mk, lbar[j], (*fcs)[j]);
    e.left_modules.push_back(Mat::from_columns(w.basis(), kk, f));
  }
  for (std::size_t i = 0; i < n; ++i) {
    e.row_idempotents.push_back(vec_to_matrix((*fps)[i], k));
    Subspace w = times_one_minus_left(mk, (*fps)[i], rbar[i]);
    e.right_modules.push_back(Mat::from_columns(w.basis(), kk, f));
  }
  Constructed c = existence_construct_full(e);
  GradedAlgebra g = c.algebra.regraded(rees_semigroup(inp.pres), c.algebra.degrees());
  if (!validate(g).empty()) throw Error("internal: induced grading violates the sandwich");
  c.algebra = std::move(g);

  const GradedAlgebra &a = c.algebra;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Vec> img;
      for (auto b : a.component(i * m + j)) img.push_back(c.psi.col(b));
      if (Subspace::span(kk, f, img) != inp.blocks[i][j]) throw Error("internal: psi(A_ij) != B_ij");
    }
  if (Subspace::span(a.dim(), f, kernel_basis(c.psi)) != jacobson_radical(a))
    throw Error("internal: ker psi != J(A)");
  return c;
}

std::pair<long, long> m2_family_row(std::size_t c) {
  if (c == 0) return {1, 0};
  if (c == 1) return {0, 1};
  return {1, static_cast<long>(c) - 1};
}

DecompositionInput m2_family_input(std::size_t t0, const std::vector<std::size_t> &class_sizes, std::size_t t1) {
  if (t0 + t1 == 0) throw Error("m2_family needs t0 + t1 >= 1");
  std::size_t s = 0;
  for (auto c : class_sizes) {
    if (c == 0) throw Error("inconsistent class sizes: empty class");
    s += c;
  }
  if (s != t0) throw Error("inconsistent class sizes: they must sum to t0");
  Field f;
  DecompositionInput inp;
  inp.k = 2;
  inp.field = f;
  inp.pres = ReesPresentation::all_e(1, t0 + t1);
  inp.blocks.assign(1, {});
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    auto [al, be] = m2_family_row(c);
    Subspace ideal = left_ideal_of_row(2, Vec{Scalar(al), Scalar(be)});
    for (std::size_t t = 0; t < class_sizes[c]; ++t) inp.blocks[0].push_back(ideal);
  }
  for (std::size_t t = 0; t < t1; ++t) inp.blocks[0].push_back(Subspace::full(4, f));
  return inp;
}

GradedAlgebra m2_family(std::size_t t0, const std::vector<std::size_t> &class_sizes, std::size_t t1) {
  return grading_from_decomposition(m2_family_input(t0, class_sizes, t1)).algebra;
}

namespace {

GradedAlgebra ft_rzb2() {
  Algebra a(Field{}, 2);
  // st = t
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) a.set_product(s, t, unit_vec(2, t, Field{}));
  return GradedAlgebra(std::move(a), right_zero_band(2), {0, 1}, {"e", "f"});
}

GradedAlgebra ut2_z2() {
  // basis e11, e22, e12
  Algebra a(Field{}, 3);
  auto u = [](std::size_t i) { return unit_vec(3, i, Field{}); };
  a.set_product(0, 0, u(0));
  a.set_product(1, 1, u(1));
  a.set_product(0, 2, u(2));
  a.set_product(2, 1, u(2));
  FiniteSemigroup z2({{0, 1}, {1, 0}}, std::nullopt, {"0", "1"});
  return GradedAlgebra(std::move(a), std::move(z2), {0, 0, 1}, {"e11", "e22", "e12"});
}

GradedAlgebra m2_trivial() {
  return trivially_graded(matrix_algebra(2), {"e11", "e12", "e21", "e22"});
}

// M_2(F[X]/(X^2)): raw coordinate (2p + q) * 2 + deg for X^deg e_pq.
GradedAlgebra m2_dual_numbers() {
  Field f;
  Algebra raw(f, 8);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          for (std::size_t d1 = 0; d1 < 2; ++d1)
            for (std::size_t d2 = 0; d2 < 2; ++d2) {
              Vec v = zero_vec(8, f);
              if (q == r && d1 + d2 < 2) v[(2 * p + s) * 2 + d1 + d2] = Scalar(1);
              raw.set_product((2 * p + q) * 2 + d1, (2 * r + s) * 2 + d2, v);
            }
  auto x = [&](std::vector<std::pair<std::size_t, int>> entries) {
    Vec v = zero_vec(8, f);
    for (auto [i, c] : entries) v[i] = Scalar(c);
    return v;
  };
  // e_pq with X^d at (2p+q)*2+d
  std::vector<Vec> basis{
      x({{0, 1}, {3, 1}}), x({{1, 1}}), // v1w1 = [[1, X], [0, 0]], X v1w1
      x({{2, 1}}), x({{3, 1}}),         // v1w2, X v1w2
      x({{4, 1}, {7, 1}}), x({{5, 1}}), // v2w1 = [[0, 0], [1, X]], X v2w1
      x({{6, 1}}), x({{7, 1}}),         // v2w2, X v2w2
  };
  ReesPresentation pres;
  pres.n = pres.m = 2;
  // w_j v_l: w1v1 = 1, w1v2 = X, w2v1 = 0, w2v2 = 1
  pres.sandwich = {{true, true}, {false, true}};
  return GradedAlgebra(raw.rebased(basis), rees_semigroup(pres), {0, 0, 1, 1, 2, 2, 3, 3},
                       {"v1w1", "Xv1w1", "v1w2", "Xv1w2", "v2w1", "Xv2w1", "v2w2", "Xv2w2"});
}

// M_2 ⊕ I with I ≅ <e12, e22> as a left module, I M_2 = I^2 = 0.
GradedAlgebra two_b() {
  Field f;
  Algebra raw(f, 6); // e11 e12 e21 e22 i1 i2 with φ(i1) = e12, φ(i2) = e22
  Algebra mk = matrix_algebra(2, f);
  auto lift = [&](const Vec &m4, const Vec &i2) {
    Vec v = zero_vec(6, f);
    for (std::size_t t = 0; t < 4; ++t) v[t] = m4[t];
    v[4] = i2[0];
    v[5] = i2[1];
    return v;
  };
  Vec z2 = zero_vec(2, f);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) raw.set_product(x, y, lift(mk.product(x, y), z2));
    for (std::size_t t = 0; t < 2; ++t) {
      // b · i_t = φ^{-1}(b φ(i_t)); φ(i_t) is column 2 of M_2
      Vec img = mk.mul(mk.basis_vec(x), mk.basis_vec(t == 0 ? 1 : 3));
      raw.set_product(x, 4 + t, lift(zero_vec(4, f), Vec{img[1], img[3]}));
    }
  }
  auto v = [&](std::vector<std::size_t> idx) {
    Vec r = zero_vec(6, f);
    for (auto i : idx) r[i] = Scalar(1);
    return r;
  };
  std::vector<Vec> basis{v({0}), v({1}), v({2}), v({3}), v({1, 4}), v({3, 5})};
  FiniteSemigroup t = right_zero_band(2);
  return GradedAlgebra(raw.rebased(basis), t, {0, 0, 0, 0, 1, 1},
                       {"e11", "e12", "e21", "e22", "e12+i1", "e22+i2"});
}

} // namespace

std::vector<std::string> fixture_names() { return {"ft-rzb2", "m2-dual-numbers", "m2-trivial", "two-b", "ut2-z2"}; }

GradedAlgebra fixture(const std::string &name) {
  if (name == "ft-rzb2") return ft_rzb2();
  if (name == "ut2-z2") return ut2_z2();
  if (name == "m2-trivial") return m2_trivial();
  if (name == "m2-dual-numbers") return m2_dual_numbers();
  if (name == "two-b") return two_b();
  std::string all;
  for (const auto &n : fixture_names()) all += (all.empty() ? "" : ", ") + n;
  throw Error("unknown fixture '" + name + "'; available: " + all);
}

} // namespace gpi
