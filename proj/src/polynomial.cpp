#include <algorithm>
#include <numeric>
#include <sstream>

#include "gpi/pi.hpp"

namespace gpi {

MultilinearGradedPolynomial MultilinearGradedPolynomial::monomial(const Word &word, const Labels &labels, Field f) {
  MultilinearGradedPolynomial p(word.size(), f);
  p.add_term(word, labels, Scalar::one(f));
  return p;
}

void MultilinearGradedPolynomial::add_term(const Word &word, const Labels &labels, const Scalar &c) {
  if (word.size() != n_ || labels.size() != n_) throw Error("term has the wrong degree");
  std::vector<bool> seen(n_, false);
  for (auto v : word) {
    if (v >= n_ || seen[v]) throw Error("term is not multilinear");
    seen[v] = true;
  }
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key{word, labels}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultilinearGradedPolynomial &MultilinearGradedPolynomial::operator+=(const MultilinearGradedPolynomial &o) {
  if (o.n_ != n_) throw Error("degree mismatch");
  for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

MultilinearGradedPolynomial MultilinearGradedPolynomial::operator+(const MultilinearGradedPolynomial &o) const {
  auto r = *this;
  r += o;
  return r;
}

MultilinearGradedPolynomial MultilinearGradedPolynomial::operator-(const MultilinearGradedPolynomial &o) const {
  return *this + o.scaled(Scalar::from(-1, field_));
}

MultilinearGradedPolynomial MultilinearGradedPolynomial::scaled(const Scalar &c) const {
  MultilinearGradedPolynomial r(n_, field_);
  if (c.is_zero()) return r;
  for (const auto &[k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

MultilinearGradedPolynomial MultilinearGradedPolynomial::permuted(const std::vector<std::size_t> &sigma) const {
  if (sigma.size() != n_) throw Error("degree mismatch");
  MultilinearGradedPolynomial r(n_, field_);
  for (const auto &[k, c] : terms_) {
    Word w(n_);
    Labels l(n_);
    for (std::size_t p = 0; p < n_; ++p) w[p] = static_cast<std::uint16_t>(sigma[k.first[p]]);
    for (std::size_t v = 0; v < n_; ++v) l[sigma[v]] = k.second[v];
    r.add_term(w, l, c);
  }
  return r;
}

MultilinearGradedPolynomial MultilinearGradedPolynomial::times(const MultilinearGradedPolynomial &g) const {
  MultilinearGradedPolynomial r(n_ + g.n_, field_);
  for (const auto &[a, ca] : terms_)
    for (const auto &[b, cb] : g.terms_) {
      Word w = a.first;
      for (auto v : b.first) w.push_back(static_cast<std::uint16_t>(v + n_));
      Labels l = a.second;
      l.insert(l.end(), b.second.begin(), b.second.end());
      r.terms_.emplace(Key{std::move(w), std::move(l)}, ca * cb);
    }
  return r;
}

std::string MultilinearGradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.str() << ")";
    for (auto v : k.first) os << "x" << v + 1 << "^" << k.second[v];
  }
  return os.str();
}

namespace {

std::vector<std::size_t> substitution_degrees(const GradedAlgebra &a, const std::vector<Vec> &subs) {
  std::vector<std::size_t> deg(subs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].size() != a.dim()) throw Error("substitution has the wrong length");
    if (is_zero(subs[i])) continue; // zero is homogeneous of every degree; it kills the term anyway
    auto d = a.degree_of(subs[i]);
    if (!d) throw Error("non-homogeneous substitution for x" + std::to_string(i + 1));
    deg[i] = *d;
  }
  return deg;
}

} // namespace

Vec evaluate(const MultilinearGradedPolynomial &f, const GradedAlgebra &a, const std::vector<Vec> &subs) {
  if (subs.size() != f.degree()) throw Error("substitution count does not match the degree");
  auto deg = substitution_degrees(a, subs);
  Vec out = a.algebra().zero();
  const Algebra &alg = a.algebra();
  for (const auto &[k, c] : f.terms()) {
    bool ok = true;
    for (std::size_t v = 0; v < f.degree() && ok; ++v) ok = deg[v] == k.second[v];
    if (!ok) continue;
    Vec p = subs[k.first[0]];
    for (std::size_t i = 1; i < k.first.size() && !is_zero(p); ++i) p = alg.mul(p, subs[k.first[i]]);
    axpy(out, c, p);
  }
  return out;
}

bool is_graded_identity(const MultilinearGradedPolynomial &f, const GradedAlgebra &a) {
  if (a.dim() == 0 || f.is_zero()) return true;
  std::size_t n = f.degree();
  // labels occurring in the terms restrict the substitutions per variable
  std::vector<std::vector<std::size_t>> choices(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> want(a.semigroup().size(), false);
    for (const auto &[k, c] : f.terms()) want[k.second[v]] = true;
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (want[a.degree(b)]) choices[v].push_back(b);
    if (choices[v].empty()) return true;
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<Vec> subs(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) subs[v] = a.algebra().basis_vec(choices[v][idx[v]]);
    if (!is_zero(evaluate(f, a, subs))) return false;
    std::size_t v = 0;
    while (v < n && ++idx[v] == choices[v].size()) idx[v++] = 0;
    if (v == n) return true;
  }
}

// --- alternated products ---------------------------------------------------

namespace {

int perm_sign(const std::vector<std::size_t> &p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

} // namespace

MultilinearGradedPolynomial AlternatingPolynomial::product() const {
  MultilinearGradedPolynomial acc(0, field);
  acc.add_term({}, {}, Scalar::one(field));
  std::vector<std::size_t> order; // global variable of each position in acc
  for (const auto &fac : factors) {
    acc = acc.times(fac.poly);
    order.insert(order.end(), fac.vars.begin(), fac.vars.end());
  }
  if (order.size() != n) throw Error("factors do not cover the variables");
  return acc.permuted(order);
}

double AlternatingPolynomial::expanded_size_bound() const {
  double s = 1;
  for (const auto &f : factors) s *= static_cast<double>(f.poly.size());
  for (const auto &set : alternating_sets)
    for (std::size_t i = 2; i <= set.size(); ++i) s *= static_cast<double>(i);
  return s;
}

MultilinearGradedPolynomial AlternatingPolynomial::expand(std::size_t max_terms) const {
  double bound = expanded_size_bound();
  if (bound > static_cast<double>(max_terms))
    throw Error("expansion needs up to " + std::to_string(static_cast<long long>(bound)) + " terms, limit " +
                std::to_string(max_terms));
  MultilinearGradedPolynomial f = product();
  for (const auto &set : alternating_sets) {
    MultilinearGradedPolynomial g(n, field);
    std::vector<std::size_t> perm(set.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      for (std::size_t i = 0; i < set.size(); ++i) sigma[set[i]] = set[perm[i]];
      auto h = f.permuted(sigma);
      g += perm_sign(perm) > 0 ? h : h.scaled(Scalar::from(-1, field));
    } while (std::next_permutation(perm.begin(), perm.end()));
    f = std::move(g);
  }
  return f;
}

Vec AlternatingPolynomial::evaluate(const GradedAlgebra &a, const std::vector<Vec> &subs, std::uint64_t max_nodes) const {
  if (subs.size() != n || labels.size() != n) throw Error("substitution count does not match the degree");
  for (const auto &fac : factors)
    for (const auto &[k, c] : fac.poly.terms())
      for (std::size_t v = 0; v < fac.vars.size(); ++v)
        if (k.second[v] != labels[fac.vars[v]]) throw Error("factor labels disagree with the variable labels");
  auto deg = substitution_degrees(a, subs);
  Vec out = a.algebra().zero();
  std::vector<bool> in_set(n, false);
  for (const auto &set : alternating_sets)
    for (auto v : set) {
      if (in_set[v]) throw Error("alternating sets overlap");
      in_set[v] = true;
    }

  // choice[s][i]: which member of set s feeds position i of set s
  std::vector<std::vector<std::size_t>> choice(alternating_sets.size());
  std::vector<std::vector<bool>> used(alternating_sets.size());
  for (std::size_t s = 0; s < alternating_sets.size(); ++s) {
    choice[s].assign(alternating_sets[s].size(), 0);
    used[s].assign(alternating_sets[s].size(), false);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!in_set[v] && deg[v] != labels[v] && deg[v] != SIZE_MAX) return out;

  std::vector<Vec> perm_subs = subs;
  auto leaf = [&]() {
    int sign = 1;
    for (std::size_t s = 0; s < alternating_sets.size(); ++s) {
      sign *= perm_sign(choice[s]);
      for (std::size_t i = 0; i < choice[s].size(); ++i)
        perm_subs[alternating_sets[s][i]] = subs[alternating_sets[s][choice[s][i]]];
    }
    Vec val;
    for (const auto &fac : factors) {
      std::vector<Vec> local;
      for (auto v : fac.vars) local.push_back(perm_subs[v]);
      Vec x = gpi::evaluate(fac.poly, a, local);
      val = val.empty() ? x : a.algebra().mul(val, x);
      if (is_zero(val)) return;
    }
    axpy(out, Scalar::from(sign, a.field()), val);
  };
  // depth-first over sets and positions, keeping only degree-compatible choices
  std::uint64_t nodes = 0;
  auto rec = [&](auto &&self, std::size_t s, std::size_t i) -> void {
    if (++nodes > max_nodes) throw Error("alternating evaluation exceeds " + std::to_string(max_nodes) + " search nodes");
    if (s == alternating_sets.size()) return leaf();
    const auto &set = alternating_sets[s];
    if (i == set.size()) return self(self, s + 1, 0);
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (used[s][j]) continue;
      std::size_t d = deg[set[j]];
      if (d != SIZE_MAX && d != labels[set[i]]) continue;
      used[s][j] = true;
      choice[s][i] = j;
      self(self, s, i + 1);
      used[s][j] = false;
    }
  };
  rec(rec, 0, 0);
  return out;
}

} // namespace gpi
