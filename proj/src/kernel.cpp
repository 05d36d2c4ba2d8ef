#include "gpi/kernel.hpp"

#include <algorithm>
#include <sstream>

namespace gpi {

Field Field::prime(std::uint64_t p) {
  if (p < 2 || !modp::is_prime(p))
    throw Error("not a prime: " + std::to_string(p));
  if (p >= (1ull << 62))
    throw Error("prime too large");
  return Field{p};
}

std::string Field::str() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

// --- modular helpers -------------------------------------------------------

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("division by zero");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) { comp = false; break; }
    }
    if (comp) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::uint64_t> d((1ull << 30) + 1, (1ull << 31) - 1);
  for (;;) {
    std::uint64_t c = d(rng) | 1;
    if (is_prime(c)) return c;
  }
}

static std::uint64_t mpz_mod(const Integer &z, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::optional<std::uint64_t> reduce(const Rational &q, std::uint64_t p) {
  std::uint64_t den = mpz_mod(q.get_den(), p);
  if (den == 0) return std::nullopt;
  return mul(mpz_mod(q.get_num(), p), inv(den, p), p);
}

std::size_t rank(std::vector<std::vector<std::uint64_t>> &rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t iv = inv(rows[r][c], p);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = mul(rows[r][j], iv, p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      std::uint64_t f = rows[i][c];
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (rows[r][j]) rows[i][j] = (rows[i][j] + p - mul(f, rows[r][j], p)) % p;
    }
    ++r;
  }
  return r;
}

} // namespace modp

// --- Scalar ----------------------------------------------------------------

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = v % p;
  return s;
}

Scalar Scalar::from(const Rational &q, Field f) {
  if (f.is_rational()) return Scalar(q);
  auto r = modp::reduce(q, f.p);
  if (!r) throw Error("denominator vanishes mod " + std::to_string(f.p));
  return residue(*r, f.p);
}

Scalar Scalar::parse(const std::string &s, Field f) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error("bad scalar \"" + s + "\"");
  q.canonicalize();
  return from(q, f);
}

namespace {
std::uint64_t common_modulus(const Scalar &a, const Scalar &b) {
  if (a.modulus() == b.modulus()) return a.modulus();
  if (a.modulus() == 0) return b.modulus();
  if (b.modulus() == 0) return a.modulus();
  throw Error("mixed scalar fields");
}
std::uint64_t as_residue(const Scalar &s, std::uint64_t p) {
  if (s.modulus() == p) return s.residue();
  auto r = modp::reduce(s.rational(), p);
  if (!r) throw Error("denominator vanishes mod " + std::to_string(p));
  return *r;
}
} // namespace

Scalar Scalar::operator+(const Scalar &o) const {
  std::uint64_t p = common_modulus(*this, o);
  if (!p) return Scalar(Rational(q_ + o.q_));
  return residue((as_residue(*this, p) + as_residue(o, p)) % p, p);
}

Scalar Scalar::operator-(const Scalar &o) const {
  std::uint64_t p = common_modulus(*this, o);
  if (!p) return Scalar(Rational(q_ - o.q_));
  return residue((as_residue(*this, p) + p - as_residue(o, p)) % p, p);
}

Scalar Scalar::operator*(const Scalar &o) const {
  std::uint64_t p = common_modulus(*this, o);
  if (!p) return Scalar(Rational(q_ * o.q_));
  return residue(modp::mul(as_residue(*this, p), as_residue(o, p), p), p);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (!p_) return Scalar(Rational(1 / q_));
  return residue(modp::inv(r_, p_), p_);
}

Scalar Scalar::operator/(const Scalar &o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (!p_) return Scalar(Rational(-q_));
  return residue((p_ - r_) % p_, p_);
}

bool Scalar::operator==(const Scalar &o) const {
  std::uint64_t p = common_modulus(*this, o);
  if (!p) return q_ == o.q_;
  return as_residue(*this, p) == as_residue(o, p);
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// --- vectors ---------------------------------------------------------------

Vec zero_vec(std::size_t n, Field f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, Field f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

Vec add(const Vec &a, const Vec &b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec &a, const Vec &b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar &c, const Vec &v) {
  Vec r(v);
  for (auto &x : r) x = c * x;
  return r;
}

void axpy(Vec &y, const Scalar &c, const Vec &x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Field field_of(const Vec &v, Field fallback) {
  for (const auto &s : v)
    if (!s.is_rational()) return s.field();
  return fallback;
}

// --- Mat -------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Mat Mat::from_rows(const std::vector<Vec> &rows, std::size_t cols, Field f) {
  Mat m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("dimension mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  m.check_field();
  return m;
}

Mat Mat::from_columns(const std::vector<Vec> &cols, std::size_t rows, Field f) {
  Mat m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("dimension mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  m.check_field();
  return m;
}

Mat Mat::identity(std::size_t n, Field f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_triplets(std::size_t rows, std::size_t cols, Field f,
                       const std::vector<std::tuple<std::size_t, std::size_t, Scalar>> &t) {
  Mat m(rows, cols, f);
  for (const auto &[i, j, v] : t) {
    if (i >= rows || j >= cols) throw Error("triplet out of range");
    m.at(i, j) += v;
  }
  m.check_field();
  return m;
}

void Mat::check_field() const {
  for (const auto &s : e_)
    if (s.modulus() != field_.p && !(s.is_rational() && !field_.is_rational()))
      throw Error("mixed scalar fields");
}

Vec Mat::row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Mat Mat::operator*(const Mat &o) const {
  if (cols_ != o.rows_) throw Error("dimension mismatch");
  Mat r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec &v) const {
  if (v.size() != cols_) throw Error("dimension mismatch");
  Vec r = zero_vec(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::operator==(const Mat &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

// --- elimination -----------------------------------------------------------

std::vector<std::size_t> rref(std::vector<Vec> &rows) {
  std::vector<std::size_t> piv;
  if (rows.empty()) return piv;
  std::size_t cols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar iv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * iv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> &a) {
  if (a.empty()) return 0;
  std::size_t cols = a[0].size(), r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

namespace {

std::size_t exact_rank(const Mat &m) {
  if (!m.field().is_rational()) {
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar &s = m.at(i, j);
        rows[i][j] = s.is_rational() ? *modp::reduce(s.rational(), m.field().p) : s.residue();
      }
    return modp::rank(rows, m.field().p);
  }
  // clear denominators row by row, then fraction-free elimination
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rational().get_den_mpz_t());
    std::vector<Integer> row(m.cols());
    bool nz = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational &q = m.at(i, j).rational();
      row[j] = q.get_num() * (l / q.get_den());
      nz = nz || row[j] != 0;
    }
    if (nz) rows.push_back(std::move(row));
  }
  return bareiss_rank(rows);
}

} // namespace

std::size_t rank(const Mat &m, RankOptions opt) {
  m.check_field();
  if (!opt.accelerate || !m.field().is_rational()) return exact_rank(m);
  std::mt19937_64 rng(opt.seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::uint64_t p = modp::random_prime(rng);
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i)
      for (std::size_t j = 0; j < m.cols() && ok; ++j) {
        auto r = modp::reduce(m.at(i, j).rational(), p);
        if (!r) ok = false;
        else rows[i][j] = *r;
      }
    if (!ok) continue; // a denominator vanished, pick another prime
    std::size_t r = modp::rank(rows, p);
    if (r == std::min(m.rows(), m.cols()) && !opt.certify) return r;
    return exact_rank(m);
  }
  return exact_rank(m);
}

std::vector<Vec> kernel_basis(const Mat &m) {
  m.check_field();
  Field f = m.field();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto piv = rref(rows);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_piv[c]) continue;
    Vec v = unit_vec(m.cols(), c, f);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][c];
    out.push_back(std::move(v));
  }
  rref(out);
  return out;
}

std::optional<Vec> solve_or_member(const std::vector<Vec> &span, const Vec &target) {
  for (const auto &v : span)
    if (v.size() != target.size()) throw Error("dimension mismatch");
  Field f = field_of(target, Field{});
  for (const auto &v : span) f = field_of(v, f);
  std::size_t n = target.size(), k = span.size();
  // augmented system [span^T | target]
  std::vector<Vec> rows(n, zero_vec(k + 1, f));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = span[j][i];
    rows[i][k] = target[i];
  }
  if (n == 0) return zero_vec(k, f);
  auto piv = rref(rows);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  Vec c = zero_vec(k, f);
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = rows[r][k];
  return c;
}

Mat inverse(const Mat &m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  std::size_t n = m.rows();
  Field f = m.field();
  std::vector<Vec> rows(n, zero_vec(2 * n, f));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    rows[i][n + i] = Scalar::one(f);
  }
  auto piv = rref(rows);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error("singular matrix");
  Mat r(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = rows[i][n + j];
  return r;
}

} // namespace gpi
