#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace gpi {

using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p == 0 means the rationals.
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);
  bool is_rational() const { return p == 0; }
  bool operator==(const Field &o) const { return p == o.p; }
  bool operator!=(const Field &o) const { return p != o.p; }
  std::string str() const;
};

class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}
  Scalar(int v) : q_(v) {}
  Scalar(const Rational &q) : q_(q) { q_.canonicalize(); }
  static Scalar residue(std::uint64_t v, std::uint64_t p);
  static Scalar zero(Field f) { return f.is_rational() ? Scalar() : residue(0, f.p); }
  static Scalar one(Field f) { return f.is_rational() ? Scalar(1) : residue(1, f.p); }
  // Maps a rational into the field, throws if the denominator vanishes mod p.
  static Scalar from(const Rational &q, Field f);
  static Scalar parse(const std::string &s, Field f);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  Field field() const { return Field{p_}; }
  const Rational &rational() const { return q_; }
  std::uint64_t residue() const { return r_; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator/(const Scalar &o) const;
  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
  Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
  Scalar &operator*=(const Scalar &o) { return *this = *this * o; }
  Scalar inverse() const;
  bool operator==(const Scalar &o) const;
  bool operator!=(const Scalar &o) const { return !(*this == o); }

  // "num/den" for rationals, decimal residue otherwise.
  std::string str() const;

private:
  Rational q_;
  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, Field f);
Vec unit_vec(std::size_t n, std::size_t i, Field f);
bool is_zero(const Vec &v);
Vec add(const Vec &a, const Vec &b);
Vec sub(const Vec &a, const Vec &b);
Vec scale(const Scalar &c, const Vec &v);
void axpy(Vec &y, const Scalar &c, const Vec &x); // y += c x
Field field_of(const Vec &v, Field fallback);

class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Field f = {});
  static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols, Field f);
  static Mat from_columns(const std::vector<Vec> &cols, std::size_t rows, Field f);
  static Mat identity(std::size_t n, Field f = {});
  // Coordinate-list constructor.
  static Mat from_triplets(std::size_t rows, std::size_t cols, Field f,
                           const std::vector<std::tuple<std::size_t, std::size_t, Scalar>> &t);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  Scalar &at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar &at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<Scalar> &entries() const { return e_; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat operator*(const Mat &o) const;
  Vec apply(const Vec &v) const;
  Mat transpose() const;
  bool operator==(const Mat &o) const;
  // Throws "mixed scalar fields" unless every entry lies in field().
  void check_field() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> e_;
};

struct RankOptions {
  bool accelerate = false; // modular first, exact rerun when not full
  bool certify = false;    // always rerun exactly after the modular pass
  std::uint64_t seed = 0x5eed;
};

std::size_t rank(const Mat &m, RankOptions opt = {});
std::vector<Vec> kernel_basis(const Mat &m);
std::optional<Vec> solve_or_member(const std::vector<Vec> &span, const Vec &target);

// Reduced row echelon form in place, returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec> &rows);
Mat inverse(const Mat &m); // throws when singular

// Modular helpers shared with the codimension engine.
namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::uint64_t random_prime(std::mt19937_64 &rng); // in (2^30, 2^31)
std::optional<std::uint64_t> reduce(const Rational &q, std::uint64_t p);
// Destroys rows.
std::size_t rank(std::vector<std::vector<std::uint64_t>> &rows, std::uint64_t p);
} // namespace modp

// Fraction-free elimination on integer rows, destroys rows.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> &rows);

} // namespace gpi
