#include <algorithm>
#include <numeric>
#include <sstream>

#include "gpi/pi.hpp"

namespace gpi {

Partition::Partition(std::vector<std::size_t> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw Error("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
}

std::size_t Partition::size() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

Partition Partition::conjugate() const {
  std::vector<std::size_t> c(parts.empty() ? 0 : parts[0], 0);
  for (auto p : parts)
    for (std::size_t j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

std::vector<Partition> partitions(std::size_t n, std::size_t max_parts) {
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto &&self, std::size_t left, std::size_t cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (std::size_t p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Integer hook_dimension(const Partition &p) {
  Partition c = p.conjugate();
  Integer num = 1, den = 1;
  std::size_t n = p.size();
  for (std::size_t i = 2; i <= n; ++i) num *= static_cast<unsigned long>(i);
  for (std::size_t i = 0; i < p.length(); ++i)
    for (std::size_t j = 0; j < p.parts[i]; ++j) den *= static_cast<unsigned long>(p.parts[i] - j + c.parts[j] - i - 1);
  return num / den;
}

YoungTableau::YoungTableau(Partition s, std::vector<std::vector<std::size_t>> r) : shape(std::move(s)), rows(std::move(r)) {
  if (rows.size() != shape.length()) throw Error("tableau does not match its shape");
  std::size_t n = shape.size();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != shape.parts[i]) throw Error("tableau does not match its shape");
    for (auto v : rows[i]) {
      if (v >= n || seen[v]) throw Error("tableau filling is not a bijection");
      seen[v] = true;
    }
  }
}

YoungTableau YoungTableau::row_reading(const Partition &p) {
  std::vector<std::vector<std::size_t>> rows;
  std::size_t v = 0;
  for (auto len : p.parts) {
    rows.emplace_back();
    for (std::size_t j = 0; j < len; ++j) rows.back().push_back(v++);
  }
  return YoungTableau(p, std::move(rows));
}

std::vector<std::vector<std::size_t>> YoungTableau::columns() const {
  std::vector<std::vector<std::size_t>> cols(shape.length() ? shape.parts[0] : 0);
  for (const auto &r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
  return cols;
}

namespace {

int sign_of(const std::vector<std::size_t> &p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Σ_{σ in Π Sym(group)} c(σ) σf, one group at a time.
MultilinearGradedPolynomial group_sum(const std::vector<std::vector<std::size_t>> &groups,
                                      const MultilinearGradedPolynomial &f, bool signed_sum) {
  std::size_t n = f.degree();
  MultilinearGradedPolynomial cur = f;
  Scalar minus = Scalar::from(-1, f.field());
  for (const auto &g : groups) {
    if (g.size() < 2) continue;
    MultilinearGradedPolynomial acc(n, f.field());
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) sigma[g[i]] = g[perm[i]];
      auto h = cur.permuted(sigma);
      acc += signed_sum && sign_of(perm) < 0 ? h.scaled(minus) : h;
    } while (std::next_permutation(perm.begin(), perm.end()));
    cur = std::move(acc);
  }
  return cur;
}

} // namespace

MultilinearGradedPolynomial apply_row_symmetrizer(const YoungTableau &t, const MultilinearGradedPolynomial &f) {
  if (t.shape.size() != f.degree()) throw Error("tableau size does not match the polynomial degree");
  return group_sum(t.rows, f, false);
}

MultilinearGradedPolynomial apply_column_alternator(const YoungTableau &t, const MultilinearGradedPolynomial &f) {
  if (t.shape.size() != f.degree()) throw Error("tableau size does not match the polynomial degree");
  return group_sum(t.columns(), f, true);
}

bool vanishing_partition(const Partition &lambda, const std::vector<int> &gamma, std::size_t k, std::size_t r) {
  if (lambda.part(r) > 0) return true;
  long s = 0;
  for (std::size_t i = 0; i < r && i < gamma.size(); ++i) s += static_cast<long>(gamma[i]) * static_cast<long>(lambda.part(i));
  return s >= static_cast<long>(k);
}

// --- witnesses -------------------------------------------------------------

namespace {

using Word = MultilinearGradedPolynomial::Word;

// [a,b] on variables a,b as a degree-2 polynomial, returned as (word, sign) pairs.
std::vector<std::pair<Word, int>> commutator(std::uint16_t a, std::uint16_t b) { return {{{a, b}, 1}, {{b, a}, -1}}; }

// Products of commutators, multiplied out.
std::vector<std::pair<Word, int>> chain(const std::vector<std::vector<std::pair<Word, int>>> &parts) {
  std::vector<std::pair<Word, int>> acc{{{}, 1}};
  for (const auto &p : parts) {
    std::vector<std::pair<Word, int>> next;
    for (const auto &[w, s] : acc)
      for (const auto &[w2, s2] : p) {
        Word x = w;
        x.insert(x.end(), w2.begin(), w2.end());
        next.emplace_back(std::move(x), s * s2);
      }
    acc = std::move(next);
  }
  return acc;
}

} // namespace

MultilinearGradedPolynomial witness_f0(std::size_t label, Field f) {
  MultilinearGradedPolynomial p(8, f);
  std::vector<std::size_t> labels(8, label);
  std::vector<std::uint16_t> s{0, 1, 2, 3};
  do {
    std::vector<std::uint16_t> r{4, 5, 6, 7};
    do {
      int sg = sign_of({s.begin(), s.end()}) * sign_of({r.begin(), r.end()});
      Word w{s[0], r[0], s[1], s[2], s[3], r[1], r[2], r[3]};
      p.add_term(w, labels, Scalar::from(sg, f));
    } while (std::next_permutation(r.begin(), r.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return p;
}

MultilinearGradedPolynomial witness_pair(std::size_t t1, std::size_t t2, Field f) {
  if (t1 == t2) throw Error("witness labels must be distinct");
  MultilinearGradedPolynomial p(4, f);
  std::vector<std::size_t> labels{t1, t1, t2, t2};
  auto a = commutator(0, 1), b = commutator(2, 3);
  for (const auto &[w, s] : chain({a, b})) p.add_term(w, labels, Scalar::from(s, f));
  for (const auto &[w, s] : chain({b, a})) p.add_term(w, labels, Scalar::from(s, f));
  return p;
}

MultilinearGradedPolynomial witness_triple(std::size_t t1, std::size_t t2, std::size_t t3, Field f) {
  if (t1 == t2 || t1 == t3 || t2 == t3) throw Error("witness labels must be distinct");
  MultilinearGradedPolynomial p(6, f);
  std::vector<std::size_t> labels{t1, t1, t2, t2, t3, t3};
  auto a = commutator(0, 1), b = commutator(2, 3), c = commutator(4, 5);
  for (const auto &[w, s] : chain({a, c, b})) p.add_term(w, labels, Scalar::from(s, f));
  for (const auto &[w, s] : chain({b, c, a})) p.add_term(w, labels, Scalar::from(-s, f));
  return p;
}

std::vector<std::size_t> triangle_pairing(const std::vector<std::vector<std::size_t>> &classes) {
  std::vector<std::vector<std::size_t>> cls;
  std::size_t total = 0;
  for (const auto &c : classes)
    if (!c.empty()) cls.push_back(c), total += c.size();
  for (const auto &c : cls)
    if (2 * c.size() > total) throw Error("class sizes violate the triangle inequality");
  std::vector<std::size_t> out;
  std::vector<std::size_t> pos(cls.size(), 0);
  auto left = [&](std::size_t i) { return cls[i].size() - pos[i]; };
  while (true) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < cls.size(); ++i)
      if (left(i)) live.push_back(i);
    std::size_t rest = 0;
    for (auto i : live) rest += left(i);
    if (live.empty()) break;
    if (live.size() == 2) {
      // equal sizes by the inequality: interleave
      while (left(live[0])) {
        out.push_back(cls[live[0]][pos[live[0]]++]);
        out.push_back(cls[live[1]][pos[live[1]]++]);
      }
      break;
    }
    if (rest == 3) {
      for (auto i : live) out.push_back(cls[i][pos[i]++]);
      break;
    }
    // the two largest classes, lowest index first on ties
    std::stable_sort(live.begin(), live.end(), [&](std::size_t x, std::size_t y) { return left(x) > left(y); });
    out.push_back(cls[live[0]][pos[live[0]]++]);
    out.push_back(cls[live[1]][pos[live[1]]++]);
  }
  return out;
}

} // namespace gpi
