#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "gpi/pi.hpp"

namespace gpi {

namespace {

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

std::string figure(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

struct Engine {
  const GradedAlgebra &a;
  std::size_t n;
  std::vector<std::size_t> supp;
  std::vector<std::vector<std::size_t>> comp; // basis indices per support element
  bool theta_dead = false;                    // products landing in θ vanish
  std::uint64_t seed;

  Engine(const GradedAlgebra &alg, std::size_t deg, std::uint64_t s) : a(alg), n(deg), seed(s) {
    supp = a.support();
    for (auto t : supp) comp.push_back(a.component(t));
    auto z = a.semigroup().zero();
    theta_dead = z && a.component(*z).empty();
  }

  // Does some word of this labelling avoid θ?
  bool live(const std::vector<std::size_t> &lab) const {
    if (!theta_dead) return true;
    const auto &sg = a.semigroup();
    std::size_t z = *sg.zero();
    std::vector<bool> used(n, false);
    auto rec = [&](auto &&self, std::size_t depth, std::size_t cur) -> bool {
      if (depth == n) return true;
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        std::size_t next = depth == 0 ? lab[v] : sg.mul(cur, lab[v]);
        if (next == z) continue;
        used[v] = true;
        bool ok = self(self, depth + 1, next);
        used[v] = false;
        if (ok) return true;
      }
      return false;
    };
    return rec(rec, 0, 0);
  }

  // Rank of the block with support positions `sel`: rows are the n! words.
  std::uint64_t block_rank(const std::vector<std::size_t> &sel) const {
    std::vector<std::size_t> lab(n);
    for (std::size_t v = 0; v < n; ++v) lab[v] = supp[sel[v]];
    if (!live(lab)) return 0;
    const Algebra &alg = a.algebra();
    std::size_t d = a.dim();
    std::size_t rows = static_cast<std::size_t>(factorial(n));
    std::size_t tuples = 1;
    for (auto s : sel) tuples *= comp[s].size();
    Mat m(rows, tuples * d, a.field());
    const auto &sg = a.semigroup();
    std::vector<std::size_t> pick(n, 0), basis_of(n);
    std::vector<Vec> prefix(n + 1);
    std::vector<bool> used(n, false);
    for (std::size_t tup = 0; tup < tuples; ++tup) {
      for (std::size_t v = 0; v < n; ++v) basis_of[v] = comp[sel[v]][pick[v]];
      std::size_t row = 0;
      // words in lexicographic order; a dead subtree only advances the row counter
      auto rec = [&](auto &&self, std::size_t depth, std::size_t deg, bool dead) -> void {
        if (depth == n) {
          if (!dead)
            for (std::size_t k = 0; k < d; ++k) m.at(row, tup * d + k) = prefix[n][k];
          ++row;
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (used[v]) continue;
          used[v] = true;
          std::size_t nd = depth == 0 ? lab[v] : sg.mul(deg, lab[v]);
          bool nd_dead = dead || (theta_dead && sg.is_zero(nd));
          if (!nd_dead) {
            prefix[depth + 1] = depth == 0 ? alg.basis_vec(basis_of[v]) : alg.mul(prefix[depth], alg.basis_vec(basis_of[v]));
            nd_dead = is_zero(prefix[depth + 1]);
          }
          self(self, depth + 1, nd, nd_dead);
          used[v] = false;
        }
      };
      rec(rec, 0, 0, false);
      std::size_t v = 0;
      while (v < n && ++pick[v] == comp[sel[v]].size()) pick[v++] = 0;
    }
    RankOptions opt;
    opt.accelerate = true;
    opt.seed = seed;
    return rank(m, opt);
  }
};

} // namespace

double codimension_budget_figure(const GradedAlgebra &a, std::size_t n, bool graded) {
  double s = graded ? static_cast<double>(a.support().size()) : (a.dim() ? 1.0 : 0.0);
  return std::pow(s, static_cast<double>(n)) * factorial(n) * static_cast<double>(a.dim());
}

CodimResult graded_codimension_report(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt) {
  if (n == 0) throw Error("codimension degree must be positive");
  CodimResult res;
  res.budget_used = codimension_budget_figure(a, n, true);
  if (res.budget_used > opt.budget)
    throw Error("codimension budget exceeded: |supp|^n*n!*dim = " + figure(res.budget_used) + " > budget " +
                figure(opt.budget));
  if (a.dim() == 0) return res;
  if (n > 12) throw Error("codimension degree too large for word enumeration");
  Engine eng(a, n, opt.seed);
  std::size_t s = eng.supp.size();
  std::size_t blocks = 1;
  for (std::size_t i = 0; i < n; ++i) blocks *= s;
  res.blocks = blocks;
  std::vector<std::uint64_t> ranks(blocks, 0);
  std::vector<char> skipped(blocks, 0);
  std::atomic<std::size_t> next{0};
  std::string failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (std::size_t b; !failed && (b = next++) < blocks;) {
      std::vector<std::size_t> sel(n);
      std::size_t x = b;
      for (std::size_t v = n; v-- > 0;) sel[v] = x % s, x /= s;
      try {
        std::vector<std::size_t> lab(n);
        for (std::size_t v = 0; v < n; ++v) lab[v] = eng.supp[sel[v]];
        if (!eng.live(lab)) {
          skipped[b] = 1;
          continue;
        }
        ranks[b] = eng.block_rank(sel);
      } catch (const std::exception &e) {
        if (!failed.exchange(true)) failure = e.what();
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  if (failed) throw Error(failure);
  res.value = std::accumulate(ranks.begin(), ranks.end(), std::uint64_t{0});
  res.skipped = static_cast<std::size_t>(std::count(skipped.begin(), skipped.end(), 1));
  return res;
}

std::uint64_t ordinary_codimension(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt) {
  if (a.dim() == 0) {
    if (n == 0) throw Error("codimension degree must be positive");
    return 0;
  }
  return graded_codimension_report(trivially_graded(a.algebra(), a.names()), n, opt).value;
}

bool codimension_sandwich_check(const GradedAlgebra &a, std::size_t n, const CodimOptions &opt) {
  std::uint64_t c = ordinary_codimension(a, n, opt);
  std::uint64_t g = graded_codimension(a, n, opt);
  double cap = std::pow(static_cast<double>(a.semigroup().size()), static_cast<double>(n)) * static_cast<double>(c);
  return c <= g && static_cast<double>(g) <= cap;
}

} // namespace gpi
