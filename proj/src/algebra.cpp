#include "gpi/algebra.hpp"

#include <algorithm>

namespace gpi {

Algebra::Algebra(Field f, std::size_t dim)
    : field_(f), dim_(dim), dense_(dim * dim * dim, Scalar::zero(f)), sparse_(dim * dim) {}

void Algebra::set_product(std::size_t i, std::size_t j, const Vec &v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw Error("product index out of range");
  auto &sp = sparse_[i * dim_ + j];
  sp.clear();
  for (std::size_t k = 0; k < dim_; ++k) {
    Scalar s = Scalar::from(Rational(0), field_) + v[k];
    if (s.modulus() != field_.p) throw Error("mixed scalar fields");
    dense_[(i * dim_ + j) * dim_ + k] = s;
    if (!s.is_zero()) sp.emplace_back(k, s);
  }
}

Vec Algebra::product(std::size_t i, std::size_t j) const {
  return Vec(dense_.begin() + (i * dim_ + j) * dim_, dense_.begin() + (i * dim_ + j + 1) * dim_);
}

Vec Algebra::mul(const Vec &x, const Vec &y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("dimension mismatch");
  Vec out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto &[k, s] : sparse_[i * dim_ + j]) out[k] += c * s;
    }
  }
  return out;
}

Mat Algebra::left_mult(const Vec &x) const {
  Mat m(dim_, dim_, field_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mul(x, basis_vec(j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Mat Algebra::right_mult(const Vec &x) const {
  Mat m(dim_, dim_, field_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mul(basis_vec(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Algebra Algebra::rebased(const std::vector<Vec> &basis) const {
  if (basis.size() != dim_) throw Error("rebased needs a full basis");
  return restricted(basis);
}

Algebra Algebra::restricted(const std::vector<Vec> &basis) const {
  BasisCoords bc(basis, dim_, field_);
  Algebra out(field_, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto c = bc.coords(mul(basis[i], basis[j]));
      if (!c) throw Error("span is not closed under multiplication");
      out.set_product(i, j, *c);
    }
  return out;
}

Algebra matrix_algebra(std::size_t k, Field f) {
  Algebra a(f, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        a.set_product(i * k + j, j * k + l, unit_vec(k * k, i * k + l, f));
  return a;
}

Mat vec_to_matrix(const Vec &v, std::size_t k) {
  if (v.size() != k * k) throw Error("dimension mismatch");
  Mat m(k, k, field_of(v, Field{}));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = v[i * k + j];
  return m;
}

Vec matrix_to_vec(const Mat &m) { return m.entries(); }

// --- graded ----------------------------------------------------------------

GradedAlgebra::GradedAlgebra(Algebra alg, FiniteSemigroup sg, std::vector<std::size_t> degree,
                             std::vector<std::string> names)
    : alg_(std::move(alg)), sg_(std::move(sg)), degree_(std::move(degree)), names_(std::move(names)) {
  if (degree_.size() != alg_.dim()) throw Error("one degree per basis element required");
  for (auto d : degree_)
    if (d >= sg_.size()) throw Error("degree out of range");
  if (names_.empty())
    for (std::size_t i = 0; i < alg_.dim(); ++i) names_.push_back("b" + std::to_string(i));
  if (names_.size() != alg_.dim()) throw Error("one name per basis element required");
}

std::vector<std::size_t> GradedAlgebra::support() const {
  std::vector<std::size_t> s(degree_);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::size_t> GradedAlgebra::component(std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree_.size(); ++i)
    if (degree_[i] == t) out.push_back(i);
  return out;
}

Subspace GradedAlgebra::component_space(std::size_t t) const {
  std::vector<Vec> vs;
  for (auto i : component(t)) vs.push_back(alg_.basis_vec(i));
  return Subspace::span(dim(), field(), std::move(vs));
}

std::optional<std::size_t> GradedAlgebra::degree_of(const Vec &v) const {
  std::optional<std::size_t> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (d && *d != degree_[i]) return std::nullopt;
    d = degree_[i];
  }
  return d;
}

GradedAlgebra GradedAlgebra::regraded(FiniteSemigroup sg, std::vector<std::size_t> degree) const {
  return GradedAlgebra(alg_, std::move(sg), std::move(degree), names_);
}

GradedAlgebra trivially_graded(const Algebra &a, std::vector<std::string> names) {
  return GradedAlgebra(a, trivial_semigroup(), std::vector<std::size_t>(a.dim(), 0), std::move(names));
}

GradedAlgebra graded_subalgebra(const GradedAlgebra &a, const std::vector<Vec> &basis) {
  std::vector<std::size_t> deg;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto d = a.degree_of(basis[i]);
    if (!d) throw Error("graded_subalgebra needs homogeneous nonzero vectors");
    deg.push_back(*d);
    names.push_back("v" + std::to_string(i));
  }
  return GradedAlgebra(a.algebra().restricted(basis), a.semigroup(), std::move(deg), std::move(names));
}

std::vector<Violation> validate(const GradedAlgebra &a) {
  std::vector<Violation> out;
  const Algebra &A = a.algebra();
  std::size_t d = A.dim();
  const auto &S = a.semigroup();
  for (std::size_t i = 0; i < d; ++i)
    if (S.is_zero(a.degree(i)))
      out.push_back({Violation::theta_degree, i, 0, 0, "basis element " + a.names()[i] + " has degree 0"});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t st = S.mul(a.degree(i), a.degree(j));
      for (const auto &[k, c] : A.sparse(i, j))
        if (a.degree(k) != st || S.is_zero(st)) {
          out.push_back({Violation::grading, i, j, k,
                         a.names()[i] + "*" + a.names()[j] + " has a coordinate on " + a.names()[k] +
                             " outside degree " + S.label(st)});
          break;
        }
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = A.zero(), rhs = A.zero();
        for (const auto &[m, c] : A.sparse(i, j))
          for (const auto &[l, e] : A.sparse(m, k)) lhs[l] += c * e;
        for (const auto &[m, c] : A.sparse(j, k))
          for (const auto &[l, e] : A.sparse(i, m)) rhs[l] += c * e;
        if (lhs != rhs)
          out.push_back({Violation::associativity, i, j, k,
                         "(" + a.names()[i] + a.names()[j] + ")" + a.names()[k] + " != " + a.names()[i] +
                             "(" + a.names()[j] + a.names()[k] + ")"});
      }
  return out;
}

} // namespace gpi
