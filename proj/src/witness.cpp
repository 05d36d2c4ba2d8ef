#include <algorithm>
#include <map>
#include <numeric>

#include "gpi/witness.hpp"

namespace gpi {

bool admissible_shape(const Partition &lambda, const std::vector<int> &gamma) {
  if (lambda.length() > gamma.size()) return false;
  long s = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i >= 1 && lambda.parts[i] % 2) return false;
    s += static_cast<long>(gamma[i]) * static_cast<long>(lambda.parts[i]);
  }
  return s <= 0;
}

std::optional<Partition> witness_shape(const std::vector<int> &gamma, std::size_t n) {
  std::optional<Partition> best;
  Integer best_dim = 0;
  for (const auto &p : partitions(n, gamma.size())) {
    if (!admissible_shape(p, gamma)) continue;
    Integer d = hook_dimension(p);
    if (!best || d > best_dim) best = p, best_dim = d;
  }
  return best;
}

namespace {

Mat unit(std::size_t i, std::size_t j, Field f) {
  Mat m(2, 2, f);
  m.at(i, j) = Scalar::one(f);
  return m;
}

Mat row_matrix(std::size_t i, const Scalar &al, const Scalar &be, Field f) {
  Mat m(2, 2, f);
  m.at(i, 0) = al;
  m.at(i, 1) = be;
  return m;
}

// The element of A^(t) with ψπ = m.
Vec preimage(const GradedAlgebra &a, const Quotient &q, const SplitIso &psi, std::size_t t, const Mat &m) {
  auto cb = a.component(t);
  std::vector<Vec> imgs;
  for (auto b : cb) imgs.push_back(psi.apply(q.project(a.algebra().basis_vec(b))));
  BasisCoords bc(imgs, psi.k * psi.k, a.field());
  auto co = bc.coords(matrix_to_vec(m));
  if (!co) throw Error("internal: matrix outside the image of the component");
  Vec v = a.algebra().zero();
  for (std::size_t l = 0; l < cb.size(); ++l) axpy(v, (*co)[l], a.algebra().basis_vec(cb[l]));
  return v;
}

MultilinearGradedPolynomial full_alternator(std::size_t n, std::size_t label, Field f) {
  MultilinearGradedPolynomial p(n, f);
  std::vector<std::uint16_t> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::size_t> labels(n, label);
  do {
    int s = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (w[i] > w[j]) s = -s;
    p.add_term(w, labels, Scalar::from(s, f));
  } while (std::next_permutation(w.begin(), w.end()));
  return p;
}

struct Builder {
  AlternatingPolynomial poly;
  std::vector<Vec> subs;

  explicit Builder(Field f) { poly.field = f; }
  std::size_t var(std::size_t label, Vec value) {
    poly.labels.push_back(label);
    subs.push_back(std::move(value));
    return poly.n++;
  }
  void factor(MultilinearGradedPolynomial p, std::vector<std::size_t> vars) {
    poly.factors.push_back({std::move(p), std::move(vars)});
  }
};

std::optional<AlternatingWitness> triangle(const GradedAlgebra &a, const M2Classification &cl, std::size_t n) {
  Field f = a.field();
  std::size_t dim = a.dim();
  if (n < 2 * dim) throw Error("degree below the smallest admissible n = " + std::to_string(2 * dim));
  std::vector<std::size_t> order = cl.t0.empty() ? std::vector<std::size_t>{} : triangle_pairing(cl.classes);
  auto ideal_of = [&](std::size_t t) -> const Subspace & {
    return cl.ideals[static_cast<std::size_t>(std::find(cl.t0.begin(), cl.t0.end(), t) - cl.t0.begin())];
  };
  SplitIso psi = cl.psi;
  bool odd = order.size() % 2 == 1;
  if (odd) psi = split_iso_to_matrix(cl.quotient.q, {ideal_of(order[order.size() - 3]), ideal_of(order[order.size() - 2])});
  std::map<std::size_t, std::pair<Scalar, Scalar>> row;
  for (auto t : cl.t0) {
    std::vector<Vec> imgs;
    for (const auto &v : ideal_of(t).basis()) imgs.push_back(psi.apply(v));
    Vec r = minimal_left_ideal_row(Subspace::span(4, f, imgs), 2);
    row[t] = {r[0], r[1]};
  }
  auto pre = [&](std::size_t t, const Mat &m) { return preimage(a, cl.quotient, psi, t, m); };

  Builder b(f);
  std::size_t blocks = n / (2 * dim), zs = n - 2 * dim * blocks;
  // z: a homogeneous idempotent preimage, so z^m times a scalar matrix stays nonzero
  std::size_t tz = a.support().front();
  Mat ez = unit(0, 0, f);
  if (row.count(tz)) {
    auto [al, be] = row[tz];
    ez = al.is_zero() ? row_matrix(1, Scalar::zero(f), Scalar::one(f), f) : row_matrix(0, Scalar::one(f), be / al, f);
  }
  Vec zval = pre(tz, ez);
  for (std::size_t i = 0; i < zs; ++i) b.factor(MultilinearGradedPolynomial::monomial({0}, {tz}, f), {b.var(tz, zval)});

  for (std::size_t blk = 0; blk < blocks; ++blk) {
    std::vector<std::size_t> xs, ys;
    // T1 variables: preimages of e11, e12, e21, e22, once for x and once for y
    std::map<std::size_t, std::vector<std::size_t>> t1x, t1y, t0x, t0y;
    for (int side = 0; side < 2; ++side) {
      auto &set = side ? ys : xs;
      for (auto t : cl.t1) {
        auto &dst = side ? t1y[t] : t1x[t];
        for (std::size_t u = 0; u < 4; ++u) set.push_back(dst.emplace_back(b.var(t, pre(t, unit(u / 2, u % 2, f)))));
      }
      for (auto t : order) {
        auto &dst = side ? t0y[t] : t0x[t];
        auto [al, be] = row[t];
        for (std::size_t i = 0; i < 2; ++i) set.push_back(dst.emplace_back(b.var(t, pre(t, row_matrix(i, al, be, f)))));
      }
    }
    for (auto t : cl.t1) {
      auto vars = t1x[t];
      vars.insert(vars.end(), t1y[t].begin(), t1y[t].end());
      b.factor(witness_f0(t, f), vars);
    }
    std::size_t pairs = odd ? (order.size() - 3) / 2 : order.size() / 2;
    auto cat = [](std::initializer_list<const std::vector<std::size_t> *> parts) {
      std::vector<std::size_t> v;
      for (auto p : parts) v.insert(v.end(), p->begin(), p->end());
      return v;
    };
    for (std::size_t l = 0; l < pairs; ++l) {
      std::size_t t1 = order[2 * l], t2 = order[2 * l + 1];
      b.factor(witness_pair(t1, t2, f), cat({&t0x[t1], &t0x[t2]}));
      b.factor(witness_pair(t1, t2, f), cat({&t0y[t1], &t0y[t2]}));
    }
    if (odd) {
      std::size_t s = order.size();
      std::size_t t1 = order[s - 3], t2 = order[s - 2], t3 = order[s - 1];
      b.factor(witness_triple(t1, t2, t3, f), cat({&t0x[t1], &t0x[t2], &t0x[t3]}));
      b.factor(witness_triple(t1, t2, t3, f), cat({&t0y[t1], &t0y[t2], &t0y[t3]}));
    }
    b.poly.alternating_sets.push_back(xs);
    b.poly.alternating_sets.push_back(ys);
  }
  AlternatingWitness w;
  w.construction = "triangle";
  w.n = n;
  w.value = b.poly.evaluate(a, b.subs);
  if (is_zero(w.value)) throw Error("internal: alternating polynomial vanished");
  w.poly = std::move(b.poly);
  w.substitution = std::move(b.subs);
  return w;
}

// --- non-triangle column fills ---------------------------------------------

enum Kind { E11, E12, E21, E22, ROW1, ROW2 };

struct Cell {
  std::size_t t;
  Kind kind;
  bool operator<(const Cell &o) const { return std::tie(t, kind) < std::tie(o.t, o.kind); }
  bool operator==(const Cell &o) const { return t == o.t && kind == o.kind; }
};

struct Fills {
  std::vector<std::size_t> t1, tt, th; // T1, T0 minus the big class, the big class
  std::map<Cell, std::pair<Vec, int>> elem; // element and θ

  std::vector<Cell> positive(std::size_t mu) const {
    std::vector<Cell> c;
    for (auto t : t1) c.insert(c.end(), {{t, E12}, {t, E11}, {t, E22}});
    for (auto t : tt) c.insert(c.end(), {{t, ROW1}, {t, ROW2}});
    for (auto t : th) c.push_back({t, E11});
    for (auto t : t1) c.push_back({t, E21});
    for (auto t : th) c.push_back({t, E21});
    if (c.size() < mu) throw Error("internal: column taller than the basis");
    c.resize(mu);
    return c;
  }

  std::vector<Cell> negative(std::size_t m, long q) const {
    long n1 = static_cast<long>(t1.size()), nt = static_cast<long>(tt.size()), nh = static_cast<long>(th.size());
    long a0 = n1 + nt, mm = static_cast<long>(m);
    std::vector<Cell> c;
    auto take = [&](const std::vector<std::size_t> &ts, long count, Kind k) {
      if (count > static_cast<long>(ts.size())) throw Error("internal: column fill ran out of elements");
      for (long i = 0; i < count; ++i) c.push_back({ts[static_cast<std::size_t>(i)], k});
    };
    if (mm < 2 * a0 + q) {
      long l = (mm + q) / 2;
      if (l <= n1 + q) {
        take(t1, l - q, E12);
        take(t1, l, E21);
      } else if (l <= n1) {
        take(t1, n1, E12);
        take(tt, l - q - n1, ROW1);
        take(t1, l, E21);
      } else {
        take(t1, n1, E12);
        take(tt, l - q - n1, ROW1);
        take(t1, n1, E21);
        take(th, l - n1, E21);
      }
      if (mm == 2 * l - q + 1) take(th, 1, E11);
    } else {
      long rem = mm - 2 * a0 - q;
      long k1 = std::min(rem, n1);
      rem -= k1;
      long l1 = std::min(rem, n1);
      rem -= l1;
      long s = std::min(rem, nh);
      rem -= s;
      long u = std::min(rem, nt);
      rem -= u;
      if (rem) throw Error("internal: column too tall for the negative fill");
      take(t1, n1, E12);
      take(t1, k1, E11);
      take(t1, a0 + q <= n1 ? a0 + q : n1, E21);
      take(t1, l1, E22);
      take(tt, nt, ROW1);
      take(tt, u, ROW2);
      take(th, s, E11);
      if (a0 + q > n1) take(th, nt + q, E21);
    }
    return c;
  }
};

std::optional<AlternatingWitness> non_triangle(const GradedAlgebra &a, const M2Classification &cl, std::size_t n) {
  Field f = a.field();
  ThetaProfile prof = theta_profile(a);
  auto shape = witness_shape(prof.gamma, n);
  if (!shape) throw Error("no admissible shape of size " + std::to_string(n));
  const Partition &lam = *shape;

  Fills fl;
  fl.t1 = cl.t1;
  fl.th = cl.classes[cl.bar_t0];
  for (auto t : cl.t0)
    if (std::find(fl.th.begin(), fl.th.end(), t) == fl.th.end()) fl.tt.push_back(t);
  for (std::size_t i = 0; i < prof.basis.size(); ++i) {
    std::size_t t = prof.basis_degree[i];
    const Mat &m = prof.basis_image[i];
    int th = prof.theta[i];
    bool t0 = std::find(fl.tt.begin(), fl.tt.end(), t) != fl.tt.end();
    Kind k;
    if (t0) k = th < 0 ? ROW1 : ROW2;
    else if (m == unit(0, 0, f)) k = E11;
    else if (m == unit(0, 1, f)) k = E12;
    else if (m == unit(1, 0, f)) k = E21;
    else if (m == unit(1, 1, f)) k = E22;
    else throw Error("internal: canonical basis is not normalized");
    fl.elem[{t, k}] = {prof.basis[i], th};
  }

  Partition conj = lam.conjugate();
  std::size_t cols = conj.length(), l2 = lam.part(1);
  std::vector<long> m(cols), q(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) m[i] = prof.beta[conj.parts[i]];
  std::size_t ell = 0;
  while (ell < cols && m[ell] > 0) ++ell;
  for (std::size_t i = ell; i < cols; ++i)
    if (m[i] > 0) throw Error("internal: positive columns are not a prefix");
  if (ell % 2) throw Error("internal: odd number of positive columns");
  long pos = 0;
  for (std::size_t i = 0; i < ell; i += 2) pos += m[i];
  long nmax = static_cast<long>((lam.part(0) - l2) / 2);
  long big_n = std::min(pos, nmax), rest = pos - big_n;
  for (std::size_t j = ell; j < l2; j += 2) {
    long v = std::max(m[j], -rest);
    q[j] = q[j + 1] = v;
    rest += v;
  }
  if (rest != 0) throw Error("internal: column targets do not balance");
  for (std::size_t i = l2; i < l2 + static_cast<std::size_t>(2 * big_n); ++i) q[i] = -1;

  // per column: groups by degree, in fill order
  struct Group {
    std::size_t t;
    std::vector<Cell> cells;
    std::vector<std::size_t> vars;
    int cls = 0; // -1, 0, 1
  };
  std::vector<std::vector<Group>> groups(cols);
  Builder b(f);
  std::vector<std::vector<std::size_t>> colvars(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    auto fill = i < ell ? fl.positive(conj.parts[i]) : fl.negative(conj.parts[i], q[i]);
    long target = i < ell ? m[i] : q[i], got = 0;
    for (std::size_t x = 0; x < fill.size(); ++x)
      for (std::size_t y = x + 1; y < fill.size(); ++y)
        if (fill[x] == fill[y]) throw Error("internal: repeated element in a column");
    for (const auto &c : fill) {
      auto it = fl.elem.find(c);
      if (it == fl.elem.end()) throw Error("internal: missing canonical element");
      got += it->second.second;
      auto g = std::find_if(groups[i].begin(), groups[i].end(), [&](const Group &x) { return x.t == c.t; });
      if (g == groups[i].end()) groups[i].push_back({c.t, {}, {}, 0}), g = groups[i].end() - 1;
      g->cells.push_back(c);
      std::size_t v = b.var(c.t, it->second.first);
      g->vars.push_back(v);
      colvars[i].push_back(v);
    }
    if (got != target) throw Error("internal: column theta sum is off target");
    for (auto &g : groups[i]) {
      bool neg = false, posv = false, any_neg = false, any_pos = false;
      for (const auto &c : g.cells) {
        int th = fl.elem.at(c).second;
        any_neg = any_neg || th < 0;
        any_pos = any_pos || th > 0;
      }
      neg = any_neg && !any_pos;
      posv = any_pos && !any_neg;
      g.cls = neg ? -1 : posv ? 1 : 0;
      if (g.cells.size() > 4 || (g.cells.size() == 4 && g.cls != 0)) throw Error("internal: oversized group");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> w1, wm1; // (column, group index)
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t g = 0; g < groups[i].size(); ++g) {
      if (groups[i][g].cls == 1) w1.emplace_back(i, g);
      if (groups[i][g].cls == -1) wm1.emplace_back(i, g);
    }
  if (w1.size() != wm1.size()) throw Error("internal: unbalanced W sets");

  auto fpoly = [&](const Group &g) { return full_alternator(g.cells.size(), g.t, f); };
  std::vector<std::size_t> match(wm1.size());
  std::iota(match.begin(), match.end(), 0);
  AlternatingWitness w;
  w.construction = "non-triangle";
  w.n = n;
  w.shape = lam;
  std::vector<std::vector<std::size_t>> trows(lam.length());
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t r = 0; r < colvars[i].size(); ++r) trows[r].push_back(colvars[i][r]);
  w.tableau = YoungTableau(lam, trows);

  for (int attempt = 0; attempt < 5040; ++attempt) {
    b.poly.factors.clear();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> partner; // W1 entry -> W-1 entry
    for (std::size_t x = 0; x < w1.size(); ++x) partner[w1[x]] = match[x];
    auto add = [&](const Group &g) { b.factor(fpoly(g), g.vars); };
    for (std::size_t c1 = 0; c1 < l2; c1 += 2) {
      std::size_t c2 = c1 + 1;
      for (std::size_t g = 0; g < groups[c1].size(); ++g) {
        const Group &x = groups[c1][g], &y = groups[c2][g];
        if (x.cls != 0) continue;
        if (x.cells.size() == 4) {
          auto vars = x.vars;
          vars.insert(vars.end(), y.vars.begin(), y.vars.end());
          b.factor(witness_f0(x.t, f), vars);
        } else {
          add(x);
          add(y);
        }
      }
      for (std::size_t g = 0; g < groups[c1].size(); ++g) {
        if (groups[c1][g].cls != 1) continue;
        for (auto c : {c1, c2}) {
          auto [mi, mg] = wm1[partner[{c, g}]];
          add(groups[mi][mg]);
          add(groups[c][g]);
        }
      }
    }
    for (std::size_t i = l2; i < cols; ++i)
      for (const auto &g : groups[i])
        if (g.cls == 0) add(g);
    b.poly.alternating_sets = colvars;
    std::size_t covered = 0;
    for (const auto &fac : b.poly.factors) covered += fac.vars.size();
    if (covered != b.poly.n) throw Error("internal: factors do not cover the variables");
    Vec val = b.poly.evaluate(a, b.subs);
    if (!is_zero(val)) {
      w.value = std::move(val);
      w.poly = b.poly;
      w.substitution = b.subs;
      return w;
    }
    if (!std::next_permutation(match.begin(), match.end())) break;
  }
  throw Error("internal: alternating polynomial vanished");
}

} // namespace

std::optional<std::size_t> smallest_admissible_n(const GradedAlgebra &a, const ExponentReport &report) {
  if (!report.m2) return std::nullopt;
  if (report.m2->triangle) return 2 * a.dim();
  for (std::size_t n = 1; n <= 4 * a.dim() * a.dim() + 8; ++n)
    for (const auto &p : partitions(n, report.gamma.size()))
      if (p.length() == report.gamma.size() && admissible_shape(p, report.gamma)) return n;
  return std::nullopt;
}

std::optional<AlternatingWitness> build_alternating_nonidentity(const GradedAlgebra &a, const ExponentReport &report,
                                                                std::size_t n) {
  if (!report.m2 || report.k != 2) return std::nullopt;
  M2Classification cl;
  try {
    cl = m2_classify(a);
  } catch (const Error &) {
    return std::nullopt;
  }
  return cl.triangle ? triangle(a, cl, n) : non_triangle(a, cl, n);
}

} // namespace gpi
