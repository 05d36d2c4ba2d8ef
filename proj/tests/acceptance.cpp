// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "gpi/constructions.hpp"
#include "gpi/exponent.hpp"
#include "gpi/io.hpp"
#include "gpi/pi.hpp"
#include "gpi/witness.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace gpi;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string &what) {
  if (!ok) throw Failure{what};
}

// --- 1 ------------------------------------------------------------------------

Subspace munn_radical_oracle(std::size_t n, std::size_t m, const Mat &p) {
  // N -> P N P on n x m matrices; the kernel in the E_ab basis (index a*m + b)
  Mat map(m * n, n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y) map.at(x * n + y, a * m + b) = p.at(x, a) * p.at(b, y);
  return Subspace::span(n * m, Field{}, kernel_basis(map));
}

void structure_suite() {
  std::vector<std::pair<std::string, GradedAlgebra>> zoo;
  for (const auto &name : fixture_names()) zoo.emplace_back(name, fixture(name));
  zoo.emplace_back("m2_family(3,(2,1),0)", m2_family(3, {2, 1}, 0));
  zoo.emplace_back("m2_family(2,(1,1),1)", m2_family(2, {1, 1}, 1));
  zoo.emplace_back("munn(2,2,[[1,2],[3,4]])", munn_algebra(2, 2, Mat::from_rows({{1, 2}, {3, 4}}, 2, Field{})));
  zoo.emplace_back("munn(2,2,all-ones)", munn_algebra(2, 2, Mat::from_rows({{1, 1}, {1, 1}}, 2, Field{})));
  for (const auto &[name, a] : zoo) {
    auto s = is_simple(a.algebra()), g = is_graded_simple(a);
    require(s.verdict <= GradedSimplicity::no && g.verdict <= GradedSimplicity::no, name + ": undecided verdict");
    bool rhs = g.holds() && is_faithful(a);
    require(s.holds() == rhs, name + ": simple != graded-simple and faithful");
  }
  auto ft = fixture("ft-rzb2");
  require(is_graded_simple(ft).holds() && !is_faithful(ft), "ft-rzb2 should be graded-simple and not faithful");
  auto dn = fixture("m2-dual-numbers");
  require(!is_graded_simple(dn).holds(), "m2-dual-numbers should not be graded-simple");
  require(!wm_graded_decomposition(dn).decomposition, "m2-dual-numbers should have no graded WM decomposition");

  std::mt19937_64 rng(101);
  for (int c = 0; c < 10; ++c) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    Mat p = gen::random_sandwich(rng, n, m);
    auto a = munn_algebra(n, m, p);
    require(jacobson_radical(a) == munn_radical_oracle(n, m, p),
            "J(Munn) != {N : PNP = 0} for a " + std::to_string(n) + "x" + std::to_string(m) + " case");
  }
}

// --- 2 ------------------------------------------------------------------------

void check_constructed(const GradedAlgebra &a, std::size_t n, std::size_t m, std::size_t k, const std::string &what) {
  require(validate(a).empty(), what + ": invalid output");
  auto g = is_graded_simple(a);
  require(g.holds(), what + ": not graded-simple (" + g.certificate + ")");
  auto wm = wm_graded_decomposition(a);
  require(wm.decomposition.has_value(), what + ": no WM decomposition (" + wm.failure + ")");
  auto layers = radical_square_layers(a, *wm.decomposition);
  require(layers.ok, what + ": layers fail (" + layers.failure + ")");
  require(jacobson_radical(a).dim() <= (n * m - 1) * k * k, what + ": dim J > (nm-1) dim B");
}

void construction_suite() {
  std::mt19937_64 rng(202);
  for (int c = 0; c < 20; ++c) {
    auto e = gen::random_existence_input(rng);
    check_constructed(existence_construct(e), e.n, e.m, e.k, "existence case " + std::to_string(c));
  }
  for (int c = 0; c < 20; ++c) {
    auto d = gen::random_decomposition_input(rng);
    check_constructed(grading_from_decomposition(d).algebra, d.pres.n, d.pres.m, d.k,
                      "decomposition case " + std::to_string(c));
  }
}

// --- 3 ------------------------------------------------------------------------

bool kills(std::size_t k, const Subspace &ideal, const Subspace &w) {
  for (const auto &a : ideal.basis())
    for (const auto &v : w.basis())
      if (!is_zero(vec_to_matrix(a, k).apply(v))) return false;
  return true;
}

Subspace product_space(std::size_t k, const Subspace &x, const Subspace &y) {
  std::vector<Vec> vs;
  for (const auto &a : x.basis())
    for (const auto &b : y.basis()) vs.push_back(matrix_to_vec(vec_to_matrix(a, k) * vec_to_matrix(b, k)));
  return Subspace::span(k * k, Field{}, vs);
}

void matrix_ideal_suite() {
  std::mt19937_64 rng(303);
  auto rk = [&] { return std::uniform_int_distribution<std::size_t>(1, 4)(rng); };
  for (int c = 0; c < 100; ++c) {
    std::size_t k = rk();
    Subspace w = gen::random_subspace(rng, k);
    require(ann_duality_inverse(k, ann_duality(k, w)) == w, "round trip W -> Ann W -> W");
    Subspace i = gen::random_left_ideal(rng, k);
    require(ann_duality(k, ann_duality_inverse(k, i)) == i, "round trip I -> W -> Ann W");
  }
  for (int c = 0; c < 100; ++c) {
    std::size_t k = rk();
    Subspace w = gen::random_subspace(rng, k);
    Subspace i = ann_duality(k, w);
    require(i.dim() == k * (k - w.dim()), "dim Ann W != k(k - dim W)");
    require(kills(k, i, w) && is_left_ideal(k, i), "Ann W is not a left ideal killing W");
  }
  for (int c = 0; c < 100; ++c) {
    std::size_t k = rk();
    Subspace w1 = gen::random_subspace(rng, k), w2 = gen::random_subspace(rng, k);
    require(ann_duality(k, w1 + w2) == intersect(ann_duality(k, w1), ann_duality(k, w2)), "Ann(W1+W2) law");
    require(ann_duality(k, intersect(w1, w2)) == ann_duality(k, w1) + ann_duality(k, w2), "Ann(W1 cap W2) law");
  }
  for (int c = 0; c < 100; ++c) {
    std::size_t k = rk();
    // a random direct decomposition of M_k into left ideals
    Mat s = gen::random_invertible(rng, k);
    std::vector<std::size_t> cuts{0};
    while (cuts.back() < k) cuts.push_back(std::uniform_int_distribution<std::size_t>(cuts.back() + 1, k)(rng));
    std::vector<Subspace> ideals;
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t)
      ideals.push_back(gen::left_ideal_generated(k, {gen::conjugated_projection(s, cuts[t], cuts[t + 1])}));
    std::shuffle(ideals.begin(), ideals.end(), rng);
    Mat p = simultaneous_column_form(k, ideals);
    Mat pinv = inverse(p);
    std::size_t off = 0;
    for (const auto &ideal : ideals) {
      std::size_t width = ideal.dim() / k;
      for (const auto &a : ideal.basis()) {
        Mat b = pinv * vec_to_matrix(a, k) * p;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t col = 0; col < k; ++col)
            require(b.at(r, col).is_zero() || (col >= off && col < off + width), "column form violated");
      }
      off += width;
    }
    require(off == k, "column blocks do not cover F^k");
  }
  for (int c = 0; c < 100; ++c) {
    std::size_t k = rk();
    Subspace v = gen::random_right_ideal(rng, k), i = gen::random_left_ideal(rng, k);
    require(product_space(k, v, i).dim() * k * k == v.dim() * i.dim(), "dim(VI) != dim V dim I / k^2");
  }
}

// --- 4 ------------------------------------------------------------------------

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string codimension_suite() {
  std::string note;
  try {
    m2_family(1, {1}, 0);
  } catch (const Error &e) {
    note = std::string("m2_family(1,(1),0) rejected (") + e.what() + "); used m2_family(1,(1),1)";
  }
  struct Case {
    std::string name;
    GradedAlgebra a;
    std::size_t n_max;
  };
  std::vector<Case> cases{{"ut2-z2", fixture("ut2-z2"), 5},
                          {"ft-rzb2", fixture("ft-rzb2"), 6},
                          {"m2_family(1,(1),1)", m2_family(1, {1}, 1), 4}};
  for (const auto &c : cases)
    for (std::size_t n = 1; n <= c.n_max; ++n) {
      std::string at = c.name + " n=" + std::to_string(n);
      std::uint64_t g = graded_codimension(c.a, n);
      require(g == oracle::codimension(c.a, n, true), at + ": graded engine != oracle");
      std::uint64_t o = ordinary_codimension(c.a, n);
      require(o == oracle::codimension(c.a, n, false), at + ": ordinary engine != oracle");
      require(o <= g && g <= ipow(c.a.semigroup().size(), n) * o, at + ": sandwich inequality");
      require(codimension_sandwich_check(c.a, n), at + ": codimension_sandwich_check");
      require(g <= ipow(c.a.dim(), n + 1), at + ": c_n > (dim A)^(n+1)");
    }
  require(graded_codimension(fixture("ut2-z2"), 2) == 5, "c_2(ut2-z2) != 5");
  return note;
}

// --- 5 ------------------------------------------------------------------------

std::vector<std::size_t> random_perm(std::mt19937_64 &rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

void young_suite() {
  for (std::size_t n = 1; n <= 8; ++n) {
    Integer s = 0, fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
    for (const auto &l : partitions(n)) s += hook_dimension(l) * hook_dimension(l);
    require(s == fact, "sum of squared hook dimensions != n! at n=" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto &l : partitions(n))
      require(hook_dimension(l) == Integer(static_cast<unsigned long>(oracle::syt_count(l.parts))),
              "hook dimension != SYT count for " + l.str());

  std::vector<std::pair<std::string, GradedAlgebra>> fixtures{
      {"ft-rzb2", fixture("ft-rzb2")}, {"m2-trivial", fixture("m2-trivial")}, {"m2_family(3,(2,1),0)", m2_family(3, {2, 1}, 0)}};
  std::mt19937_64 rng(505);
  for (const auto &[name, a] : fixtures) {
    auto prof = theta_profile(a);
    std::size_t r = prof.gamma.size();
    std::vector<Partition> pool;
    for (std::size_t n = 1; n <= r + 2 && pool.size() < 6; ++n)
      for (const auto &l : partitions(n))
        if (vanishing_partition(l, prof.gamma, prof.k, r) && n <= 7) pool.push_back(l);
    require(!pool.empty(), name + ": no vanishing partition within reach");
    auto supp = a.support();
    for (int c = 0; c < 50; ++c) {
      const Partition &l = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      std::size_t n = l.size();
      // f: two random monomials with random labels
      MultilinearGradedPolynomial f(n);
      for (int t = 0; t < 2; ++t) {
        auto w = random_perm(rng, n);
        MultilinearGradedPolynomial::Word word(w.begin(), w.end());
        MultilinearGradedPolynomial::Labels lab(n);
        for (auto &x : lab) x = supp[std::uniform_int_distribution<std::size_t>(0, supp.size() - 1)(rng)];
        f.add_term(word, lab, Scalar(gen::small(rng, 1, 3)));
      }
      // random tableau of shape l
      auto fill = random_perm(rng, n);
      std::vector<std::vector<std::size_t>> rows;
      std::size_t pos = 0;
      for (auto len : l.parts) {
        rows.emplace_back(fill.begin() + static_cast<long>(pos), fill.begin() + static_cast<long>(pos + len));
        pos += len;
      }
      YoungTableau t(l, rows);
      auto e = apply_young_symmetrizer(t, f);
      // substitution from the canonical basis, degrees matching the first term's labels where possible
      const auto &lab0 = f.terms().begin()->first.second;
      std::vector<Vec> subs;
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> cand;
        for (std::size_t b = 0; b < prof.basis.size(); ++b)
          if (prof.basis_degree[b] == lab0[v]) cand.push_back(b);
        subs.push_back(prof.basis[cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)]]);
      }
      require(is_zero(evaluate(e, a, subs)), name + ": e*_T f nonzero for " + l.str());
    }
  }
}

// --- 6 ------------------------------------------------------------------------

// Value of a polynomial on 2x2 matrices, ignoring labels.
Mat eval_on_matrices(const MultilinearGradedPolynomial &f, const std::vector<Mat> &xs) {
  Mat out(2, 2);
  for (const auto &[key, c] : f.terms()) {
    Mat p = xs[key.first[0]];
    for (std::size_t i = 1; i < key.first.size(); ++i) p = p * xs[key.first[i]];
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) out.at(i, j) += c * p.at(i, j);
  }
  return out;
}

Mat row_mat(std::size_t i, const Scalar &a, const Scalar &b) {
  Mat m(2, 2);
  m.at(i, 0) = a;
  m.at(i, 1) = b;
  return m;
}

void witness_suite() {
  std::mt19937_64 rng(606);
  auto q = [&] { return Scalar(Rational(gen::small(rng, -9, 9), gen::small(rng, 1, 5))); };
  auto pair = witness_pair(0, 1);
  for (int c = 0; c < 50; ++c) {
    Scalar a = q(), b = q(), at = q(), bt = q();
    Mat v = eval_on_matrices(pair, {row_mat(0, a, b), row_mat(1, a, b), row_mat(0, at, bt), row_mat(1, at, bt)});
    Scalar det = a * bt - b * at, want = -(det * det);
    require(v.at(0, 0) == want && v.at(1, 1) == want && v.at(0, 1).is_zero() && v.at(1, 0).is_zero(),
            "pair value != -det^2 (e11 + e22)");
  }
  auto m2 = fixture("m2-trivial");
  auto f0 = witness_f0(m2.degree(0));
  // the fixture basis is e11, e12, e21, e22
  std::vector<Vec> subs;
  for (int side = 0; side < 2; ++side)
    for (std::size_t u = 0; u < 4; ++u) subs.push_back(m2.algebra().basis_vec(u));
  Vec val = evaluate(f0, m2, subs);
  Mat fm = eval_on_matrices(f0, {gen::unit(2, 0, 0), gen::unit(2, 0, 1), gen::unit(2, 1, 0), gen::unit(2, 1, 1),
                                 gen::unit(2, 0, 0), gen::unit(2, 0, 1), gen::unit(2, 1, 0), gen::unit(2, 1, 1)});
  require(val == matrix_to_vec(fm), "library evaluation of f0 disagrees with matrix evaluation");
  require(!is_zero(val), "f0 vanishes on the matrix units");
  require(!fm.at(0, 0).is_zero() && fm.at(0, 0) == fm.at(1, 1) && fm.at(0, 1).is_zero() && fm.at(1, 0).is_zero(),
          "f0 value is not a nonzero scalar matrix");

  for (auto [t0, cs] : std::vector<std::pair<std::size_t, std::vector<std::size_t>>>{{2, {1, 1}}, {3, {2, 1}}}) {
    auto a = m2_family(t0, cs, 0);
    auto rep = m2_exponent(a);
    auto n = smallest_admissible_n(a, rep);
    require(n.has_value(), "no admissible n");
    auto w = build_alternating_nonidentity(a, rep, *n);
    std::string name = "m2_family(" + std::to_string(t0) + ")";
    require(w.has_value(), name + ": witness not built");
    require(!is_zero(w->poly.evaluate(a, w->substitution)), name + ": witness evaluates to zero");
    // alternation: repeat an element inside one alternating set
    const auto &set = w->poly.alternating_sets.front();
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (a.degree_of(w->substitution[set[i]]) == a.degree_of(w->substitution[set[j]])) {
          auto s = w->substitution;
          s[set[j]] = s[set[i]];
          require(is_zero(w->poly.evaluate(a, s)), name + ": repeated substitution not annihilated");
          i = j = set.size();
        }
  }
}

// --- 7 ------------------------------------------------------------------------

void exponent_suite() {
  auto r1 = m2_exponent(m2_family(3, {2, 1}, 0));
  require(r1.m2 && r1.m2->exact == "3+2*sqrt(2)", "exact form of m2_family(3,(2,1),0)");
  require(std::abs(r1.m2->value - 5.8284271247) <= 1e-9 && r1.m2->value < 6, "decimal of 3+2sqrt(2)");
  auto r2 = m2_exponent(m2_family(2, {1, 1}, 1));
  require(r2.m2 && r2.m2->exact == "8" && r2.m2->value == 8 && r2.r == 8, "m2_family(2,(1,1),1) exponent != 8");
  for (long a = 1; a <= 6; ++a)
    for (long c = 1; c < a; ++c) {
      std::vector<int> gamma(static_cast<std::size_t>(c), -1);
      gamma.insert(gamma.end(), 3, 0);
      gamma.insert(gamma.end(), static_cast<std::size_t>(a), 1);
      auto z = zeta_root(gamma);
      require(z.found, "no root");
      require(std::abs(z.value() - std::sqrt(static_cast<double>(c) / static_cast<double>(a))) <= 1e-10,
              "zeta != sqrt(c/a)");
      Rational target(c, a);
      target.canonicalize();
      require(z.lo * z.lo <= target && target <= z.hi * z.hi, "enclosure misses sqrt(c/a)");
    }
  std::mt19937_64 rng(707);
  for (int c = 0; c < 30; ++c) {
    std::vector<int> g;
    do {
      std::size_t r = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
      g.clear();
      for (std::size_t i = 0; i < r; ++i) g.push_back(static_cast<int>(gen::small(rng, -2, 2)));
      std::sort(g.begin(), g.end());
    } while (g[0] >= 0 || std::accumulate(g.begin(), g.end(), 0) < 0);
    auto pm = phi_max(g, 1000 + static_cast<std::uint64_t>(c));
    require(pm.search_best <= pm.d + 1e-6, "search exceeded the closed-form maximum");
  }
}

// --- 8 ------------------------------------------------------------------------

struct Run {
  std::string out;
  int code = 0;
};

Run run(const std::string &cmd) {
  Run r;
  FILE *p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) throw Failure{"cannot run " + cmd};
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, got);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void determinism_suite() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("gpi-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  unsetenv("GPI_CACHE_DIR");
  std::string exe = GPI_EXE;
  auto doc = [&](const std::string &name) { return (dir / (name + ".json")).string(); };
  for (const auto &f : fixture_names()) {
    std::string c = exe + " construct fixture name=" + f + " --out " + doc(f);
    require(run(c).code == 0, "construct " + f);
    std::string first = slurp(doc(f));
    require(run(c).code == 0 && slurp(doc(f)) == first, "construct " + f + " not byte-identical");
  }
  require(run(exe + " construct m2-family t0=3 classes=2,1 t1=0 --out " + doc("m3")).code == 0, "construct m2-family");
  std::vector<std::string> cmds;
  for (const auto &f : fixture_names()) {
    cmds.push_back(exe + " check " + doc(f));
    cmds.push_back(exe + " analyze " + doc(f));
  }
  cmds.push_back(exe + " codim " + doc("ut2-z2") + " --n 4 --threads 1");
  cmds.push_back(exe + " codim " + doc("ft-rzb2") + " --n 5 --threads 3");
  cmds.push_back(exe + " exponent " + doc("m3") + " --n 3 --threads 2");
  cmds.push_back(exe + " exponent " + doc("m2-trivial"));
  for (const auto &c : cmds) {
    Run a = run(c), b = run(c);
    require(a.out == b.out && a.code == b.code && !a.out.empty(), "not byte-identical: " + c);
  }
  // thread count does not leak into reports
  require(run(exe + " codim " + doc("ut2-z2") + " --n 4 --threads 1").out ==
              run(exe + " codim " + doc("ut2-z2") + " --n 4 --threads 4").out,
          "codim output depends on --threads");
  // cached reports replay the same bytes
  std::string cache = (dir / "cache").string();
  std::string c = "GPI_CACHE_DIR=" + cache + " " + exe + " codim " + doc("ut2-z2") + " --n 4";
  Run fresh = run(c), cached = run(c);
  require(fresh.out == cached.out && fresh.out == run(cmds[cmds.size() - 4]).out, "cache replay differs");
  // round trip: a re-emitted document hashes the same
  Run chk = run(exe + " check " + doc("m3"));
  require(chk.code == 0 && chk.out.find("\"valid\": true") != std::string::npos, "constructed document invalid");
  require(run(exe + " construct fixture name=ut2-z2").out == slurp(doc("ut2-z2")), "stdout and --out differ");
  fs::remove_all(dir);
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    double cap;
    std::function<std::string()> body;
  };
  auto wrap = [](void (*f)()) { return std::function<std::string()>([f] { f(); return std::string(); }); };
  std::vector<Criterion> all{
      {"structure suite", 10, wrap(structure_suite)},
      {"construction suite", 60, wrap(construction_suite)},
      {"matrix-ideal suite", 30, wrap(matrix_ideal_suite)},
      {"codimension oracle equivalence", 300, codimension_suite},
      {"Young suite", 60, wrap(young_suite)},
      {"witness suite", 60, wrap(witness_suite)},
      {"exponent suite", 60, wrap(exponent_suite)},
      {"determinism", 300, wrap(determinism_suite)},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict, detail;
    try {
      detail = all[i].body();
      verdict = "PASS";
    } catch (const Failure &f) {
      verdict = "FAIL";
      detail = f.what;
    } catch (const std::exception &e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (verdict == "PASS" && secs > all[i].cap) {
      verdict = "FAIL";
      detail = "over the time cap";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / cap %.0fs", secs, all[i].cap);
    std::cout << verdict << " " << i + 1 << " " << all[i].name << " (" << timing << ")"
              << (detail.empty() ? "" : ": " + detail) << std::endl;
    failed += verdict != "PASS";
  }
  return failed ? 1 : 0;
}
