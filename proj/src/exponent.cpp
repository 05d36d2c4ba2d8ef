#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "gpi/exponent.hpp"
#include "gpi/witness.hpp"

namespace gpi {

int theta_of(const Mat &m) {
  int best = 0;
  bool any = false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        int v = static_cast<int>(i) - static_cast<int>(j);
        if (!any || v < best) best = v;
        any = true;
      }
  if (!any) throw Error("theta of a zero matrix");
  return best;
}

namespace {

void require_right_zero_support(const GradedAlgebra &a) {
  auto supp = a.support();
  for (auto s : supp)
    for (auto t : supp)
      if (a.semigroup().mul(s, t) != t) throw Error("grading is not by a right zero band on its support");
}

Subspace image_of_component(const GradedAlgebra &a, const Quotient &q, std::size_t t) {
  std::vector<Vec> vs;
  for (auto b : a.component(t)) vs.push_back(q.project(a.algebra().basis_vec(b)));
  Subspace s = Subspace::span(q.q.dim(), a.field(), vs);
  if (s.dim() != vs.size()) throw Error("component " + a.semigroup().label(t) + " meets J(A)");
  return s;
}

bool is_left_ideal_in(const Algebra &q, const Subspace &l) {
  for (std::size_t b = 0; b < q.dim(); ++b)
    for (const auto &v : l.basis())
      if (!l.contains(q.mul(q.basis_vec(b), v))) return false;
  return true;
}

// Classification without the ψ-dependent rows; nullopt when the shape does not fit.
struct RawM2 {
  std::vector<std::size_t> t0, t1;
  std::vector<Subspace> ideals;
  std::vector<std::vector<std::size_t>> classes;
  std::size_t bar = 0;
};

std::optional<RawM2> raw_m2(const GradedAlgebra &a, const Quotient &q, std::string *why) {
  auto fail = [&](const std::string &s) -> std::optional<RawM2> {
    if (why) *why = s;
    return std::nullopt;
  };
  if (q.q.dim() != 4) return fail("quotient is not M_2");
  RawM2 r;
  for (auto t : a.support()) {
    Subspace it = image_of_component(a, q, t);
    if (it.dim() == 4) r.t1.push_back(t);
    else if (it.dim() == 2 && is_left_ideal_in(q.q, it)) {
      r.t0.push_back(t);
      r.ideals.push_back(it);
    } else
      return fail("image of component " + a.semigroup().label(t) + " is neither M_2 nor a minimal left ideal");
  }
  std::vector<bool> done(r.t0.size(), false);
  for (std::size_t i = 0; i < r.t0.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < r.t0.size(); ++j)
      if (!done[j] && r.ideals[j] == r.ideals[i]) cls.push_back(r.t0[j]), done[j] = true;
    r.classes.push_back(std::move(cls));
  }
  // largest class, first one on ties (classes are ordered by their first element)
  for (std::size_t c = 1; c < r.classes.size(); ++c)
    if (r.classes[c].size() > r.classes[r.bar].size()) r.bar = c;
  return r;
}

std::size_t t0_position(const RawM2 &r, std::size_t t) {
  return static_cast<std::size_t>(std::find(r.t0.begin(), r.t0.end(), t) - r.t0.begin());
}

} // namespace

ThetaProfile theta_profile(const GradedAlgebra &a) {
  ThetaProfile p;
  Field f = a.field();
  p.quotient = radical_quotient(a.algebra());
  const Quotient &q = p.quotient;
  if (q.q.dim() == 0) throw Error("non-split quotient: A/J(A) = 0");
  for (auto t : a.support()) image_of_component(a, q, t);

  std::optional<RawM2> m2;
  bool rzb = true;
  for (auto s : a.support())
    for (auto t : a.support()) rzb = rzb && a.semigroup().mul(s, t) == t;
  if (rzb && q.q.dim() == 4) m2 = raw_m2(a, q, nullptr);
  try {
    if (m2 && !m2->t0.empty()) {
      std::size_t rep = m2->classes[m2->bar][0];
      p.psi = split_iso_to_matrix(q.q, {m2->ideals[t0_position(*m2, rep)]});
      p.psi_choice = "psi(I_" + a.semigroup().label(rep) + ") = <e11,e21>";
    } else {
      p.psi = split_iso_to_matrix(q.q);
      p.psi_choice = "default";
    }
  } catch (const Error &e) {
    throw Error(std::string("non-split quotient: ") + e.what());
  }
  std::size_t k = p.k = p.psi.k;

  // matrix positions sorted by (i - j, i): echelon pivots then carry θ
  std::vector<std::size_t> order(k * k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    long dx = static_cast<long>(x / k) - static_cast<long>(x % k), dy = static_cast<long>(y / k) - static_cast<long>(y % k);
    return dx != dy ? dx < dy : x / k < y / k;
  });
  for (auto t : a.support()) {
    auto cb = a.component(t);
    std::vector<Vec> imgs, perm_rows;
    for (auto b : cb) {
      Vec m = p.psi.apply(q.project(a.algebra().basis_vec(b)));
      imgs.push_back(m);
      Vec pr(k * k, Scalar::zero(f));
      for (std::size_t c = 0; c < k * k; ++c) pr[c] = m[order[c]];
      perm_rows.push_back(std::move(pr));
    }
    rref(perm_rows);
    BasisCoords back(imgs, k * k, f);
    for (const auto &pr : perm_rows) {
      Vec m(k * k, Scalar::zero(f));
      for (std::size_t c = 0; c < k * k; ++c) m[order[c]] = pr[c];
      auto co = back.coords(m);
      Vec v = a.algebra().zero();
      for (std::size_t l = 0; l < cb.size(); ++l) axpy(v, (*co)[l], a.algebra().basis_vec(cb[l]));
      p.basis.push_back(v);
      p.basis_degree.push_back(t);
      p.basis_image.push_back(vec_to_matrix(m, k));
      p.theta.push_back(theta_of(p.basis_image.back()));
    }
  }
  p.gamma = p.theta;
  std::sort(p.gamma.begin(), p.gamma.end());
  p.beta.assign(1, 0);
  for (auto g : p.gamma) p.beta.push_back(p.beta.back() + g);
  if (k >= 2) p.gamma1_ok = !p.gamma.empty() && p.gamma[0] == 1 - static_cast<int>(k);
  return p;
}

// --- ζ and Φ ----------------------------------------------------------------

Rational zeta_polynomial(const std::vector<int> &gamma, const Rational &z) {
  Rational s = 0;
  for (auto g : gamma) {
    Rational pw = 1;
    for (int e = 0; e < g - gamma[0]; ++e) pw *= z;
    s += g * pw;
  }
  return s;
}

ZetaRoot zeta_root(const std::vector<int> &gamma) {
  if (gamma.empty()) throw Error("empty gamma");
  if (!std::is_sorted(gamma.begin(), gamma.end())) throw Error("gamma must be ascending");
  if (gamma[0] >= 0) throw Error("bound machinery inapplicable: gamma_1 >= 0");
  ZetaRoot z;
  long sum = std::accumulate(gamma.begin(), gamma.end(), 0L);
  if (sum < 0) {
    z.note = "no root in (0,1]: P < 0 on [0,1]";
    return z;
  }
  z.found = true;
  if (sum == 0) {
    z.exact = true;
    z.lo = z.hi = 1;
    return z;
  }
  Rational lo = 0, hi = 1, eps("1/1000000000000");
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    Rational v = zeta_polynomial(gamma, mid);
    if (v == 0) {
      z.exact = true;
      z.lo = z.hi = mid;
      return z;
    }
    (v < 0 ? lo : hi) = mid;
  }
  z.lo = lo;
  z.hi = hi;
  return z;
}

double phi_value(const std::vector<double> &alpha) {
  double s = 0;
  for (double x : alpha)
    if (x > 0) s -= x * std::log(x);
  return std::exp(s);
}

bool in_omega(const std::vector<int> &gamma, const std::vector<double> &alpha, double tol) {
  double sum = 0, dot = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < -tol) return false;
    if (i && alpha[i] > alpha[i - 1] + tol) return false;
    sum += alpha[i];
    dot += gamma[i] * alpha[i];
  }
  return std::fabs(sum - 1) <= tol * static_cast<double>(alpha.size() + 1) && dot <= tol;
}

namespace {

// Random feasible start, then pairwise mass transfers that keep the point in Ω.
double local_search(const std::vector<int> &gamma, std::uint64_t seed) {
  std::size_t r = gamma.size();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> a(r);
  double s = 0;
  for (auto &x : a) s += (x = ex(rng));
  for (auto &x : a) x /= s;
  std::sort(a.begin(), a.end(), std::greater<>());
  double dot = 0;
  for (std::size_t i = 0; i < r; ++i) dot += gamma[i] * a[i];
  if (dot > 0) {
    double mix = dot / (dot - gamma[0]);
    for (auto &x : a) x *= 1 - mix;
    a[0] += mix;
  }
  double best = phi_value(a);
  auto feasible = [&](const std::vector<double> &b) {
    double dt = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (b[i] < 0 || (i && b[i] > b[i - 1])) return false;
      dt += gamma[i] * b[i];
    }
    return dt <= 0;
  };
  for (double step = 0.25; step > 1e-10; step /= 2) {
    bool improved = true;
    for (int pass = 0; improved && pass < 200; ++pass) {
      improved = false;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          if (i == j) continue;
          std::vector<double> b = a;
          double delta = std::min(step, b[j]);
          b[i] += delta;
          b[j] -= delta;
          if (!feasible(b)) continue;
          double v = phi_value(b);
          if (v > best) best = v, a = std::move(b), improved = true;
        }
    }
  }
  return best;
}

} // namespace

PhiMax phi_max(const std::vector<int> &gamma, std::uint64_t seed, unsigned starts) {
  if (!std::is_sorted(gamma.begin(), gamma.end())) throw Error("gamma must be ascending");
  std::size_t r = gamma.size();
  if (r == 0) throw Error("empty gamma");
  PhiMax out;
  long sum = std::accumulate(gamma.begin(), gamma.end(), 0L);
  if (sum <= 0) {
    out.d = static_cast<double>(r);
    out.alpha.assign(r, 1.0 / static_cast<double>(r));
  } else {
    ZetaRoot z = zeta_root(gamma);
    double zeta = z.value();
    double tot = 0;
    out.alpha.resize(r);
    for (std::size_t i = 0; i < r; ++i) tot += out.alpha[i] = std::pow(zeta, gamma[i] - gamma[0]);
    for (auto &x : out.alpha) x /= tot;
    out.d = 0;
    for (auto g : gamma) out.d += std::pow(zeta, g);
  }
  std::vector<double> best(starts, 0);
  auto run = [&](unsigned lo, unsigned hi) {
    for (unsigned s = lo; s < hi; ++s) best[s] = local_search(gamma, seed + s);
  };
  unsigned threads = std::max(1u, std::min(starts, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, starts * t / threads, starts * (t + 1) / threads);
  for (auto &t : pool) t.join();
  out.search_best = starts ? *std::max_element(best.begin(), best.end()) : 0;
  if (out.search_best > out.d + 1e-6) throw Error("internal: search exceeded the closed-form maximum");
  return out;
}

// --- M2 -----------------------------------------------------------------------

M2Classification m2_classify(const GradedAlgebra &a) {
  require_right_zero_support(a);
  M2Classification c;
  c.quotient = radical_quotient(a.algebra());
  std::string why;
  auto raw = raw_m2(a, c.quotient, &why);
  if (!raw) throw Error(why);
  c.t0 = raw->t0;
  c.t1 = raw->t1;
  c.classes = raw->classes;
  c.bar_t0 = raw->bar;
  c.ideals = raw->ideals;
  if (c.t0.empty()) {
    c.psi = split_iso_to_matrix(c.quotient.q);
  } else {
    c.psi = split_iso_to_matrix(c.quotient.q, {c.ideals[t0_position(*raw, c.classes[c.bar_t0][0])]});
    std::size_t big = c.classes[c.bar_t0].size();
    c.triangle = 2 * big <= c.t0.size();
  }
  for (const auto &it : c.ideals) {
    std::vector<Vec> imgs;
    for (const auto &v : it.basis()) imgs.push_back(c.psi.apply(v));
    Vec row = minimal_left_ideal_row(Subspace::span(4, a.field(), imgs), 2);
    c.rows.emplace_back(row[0], row[1]);
  }
  return c;
}

std::string closed_form_exponent(long a, long c) {
  long s = a + c, ac = a * c, u = 1, f = ac;
  for (long p = 2; p * p <= f; ++p)
    while (f % (p * p) == 0) f /= p * p, u *= p;
  std::ostringstream os;
  if (ac == 0) os << s;
  else if (f == 1) os << s + 2 * u;
  else os << s << "+" << 2 * u << "*sqrt(" << f << ")";
  return os.str();
}

ExponentReport upper_bound_report(const GradedAlgebra &a) {
  ExponentReport rep;
  ThetaProfile p = theta_profile(a);
  rep.k = p.k;
  rep.r = a.dim();
  rep.gamma = p.gamma;
  rep.psi_choice = p.psi_choice;
  if (!p.gamma1_ok) rep.notes.push_back("gamma_1 != 1 - k");
  long sum = std::accumulate(p.gamma.begin(), p.gamma.end(), 0L);
  rep.d_lo = rep.d_hi = static_cast<long>(rep.r);
  if (p.gamma.empty() || p.gamma[0] >= 0) {
    bool all_zero = std::all_of(p.gamma.begin(), p.gamma.end(), [](int g) { return g == 0; });
    rep.notes.push_back(all_zero ? "all gamma = 0: d = r" : "bound machinery inapplicable: gamma_1 >= 0");
    if (!all_zero) rep.d_lo = rep.d_hi = 0;
  } else if (sum < 0) {
    rep.zeta = zeta_root(p.gamma);
    rep.notes.push_back("sum of gamma < 0: no zeta bound, trivial bound d = r");
  } else {
    rep.zeta = zeta_root(p.gamma);
    const Rational &lo = rep.zeta->lo, &hi = rep.zeta->hi;
    // ζ^g is increasing in ζ for g >= 0 and decreasing for g < 0
    rep.d_lo = rep.d_hi = 0;
    for (auto g : p.gamma) {
      Rational pl = 1, ph = 1;
      for (int e = 0; e < std::abs(g); ++e) pl *= lo, ph *= hi;
      if (g >= 0) rep.d_lo += pl, rep.d_hi += ph;
      else rep.d_lo += 1 / ph, rep.d_hi += 1 / pl;
    }
  }
  rep.d = (rep.d_lo.get_d() + rep.d_hi.get_d()) / 2;
  return rep;
}

namespace {

// s + 2 sqrt(ac) in [lo, hi], decided exactly.
bool closed_form_in(long s, long ac, const Rational &lo, const Rational &hi) {
  auto ge = [&](const Rational &x) { // s + 2 sqrt(ac) >= x
    Rational h = (x - s) / 2;
    return h <= 0 || h * h <= ac;
  };
  auto le = [&](const Rational &x) { // s + 2 sqrt(ac) <= x
    Rational h = (x - s) / 2;
    return h >= 0 && h * h >= ac;
  };
  return ge(lo) && le(hi);
}

} // namespace

ExponentReport m2_exponent(const GradedAlgebra &a) {
  M2Classification cl = m2_classify(a);
  ExponentReport rep = upper_bound_report(a);
  M2Summary m;
  m.t0_size = cl.t0.size();
  m.t1_size = cl.t1.size();
  for (const auto &c : cl.classes) m.class_sizes.push_back(c.size());
  m.bar_t0_size = cl.t0.empty() ? 0 : cl.classes[cl.bar_t0].size();
  m.triangle = cl.triangle;
  if (m.triangle) {
    m.exact = std::to_string(a.dim());
    m.value = static_cast<double>(a.dim());
    m.a = m.c = 0;
    if (!closed_form_in(static_cast<long>(a.dim()), 0, rep.d_lo, rep.d_hi))
      throw Error("internal: exponent disagrees with the upper bound");
  } else {
    m.a = static_cast<long>(m.t1_size + m.bar_t0_size);
    m.c = static_cast<long>(m.t0_size + m.t1_size - m.bar_t0_size);
    m.exact = closed_form_exponent(m.a, m.c);
    m.value = static_cast<double>(m.a + m.c) + 2 * std::sqrt(static_cast<double>(m.a * m.c));
    if (!closed_form_in(m.a + m.c, m.a * m.c, rep.d_lo, rep.d_hi))
      throw Error("internal: exponent disagrees with the upper bound");
    if (!rep.zeta || !rep.zeta->found ||
        std::fabs(rep.zeta->value() - std::sqrt(static_cast<double>(m.c) / static_cast<double>(m.a))) > 1e-10)
      throw Error("internal: zeta disagrees with sqrt(c/a)");
  }
  rep.m2 = m;
  return rep;
}

GrowthTable growth_table(const GradedAlgebra &a, std::size_t n_max, const CodimOptions &opt) {
  GrowthTable tab;
  double d = std::nan("");
  std::optional<ExponentReport> rep;
  try {
    rep = upper_bound_report(a);
    d = rep->d;
    if (rep->k == 2) rep = m2_exponent(a);
  } catch (const Error &) {
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    try {
      row.c = graded_codimension(a, n, opt);
    } catch (const Error &e) {
      tab.notice = "truncated at n = " + std::to_string(n) + ": " + e.what();
      break;
    }
    row.root = row.c ? std::pow(static_cast<double>(row.c), 1.0 / static_cast<double>(n)) : 0;
    row.d = d;
    row.cap_ok = static_cast<double>(row.c) <= std::pow(static_cast<double>(a.dim()), static_cast<double>(n + 1));
    if (rep && rep->m2) {
      try {
        auto w = build_alternating_nonidentity(a, *rep, n);
        if (w && w->shape) {
          row.witness_dim = hook_dimension(*w->shape);
          row.witness_ok = Integer(static_cast<unsigned long>(row.c)) >= *row.witness_dim;
        }
      } catch (const Error &) {
      }
    }
    tab.rows.push_back(row);
  }
  return tab;
}

} // namespace gpi
