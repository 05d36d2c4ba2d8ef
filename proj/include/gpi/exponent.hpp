#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpi/algebra.hpp"
#include "gpi/pi.hpp"

namespace gpi {

struct ThetaProfile {
  std::string psi_choice;
  std::size_t k = 0;
  Quotient quotient;
  SplitIso psi;
  // canonical homogeneous basis: per support element, an echelon basis of ψπ(A^(t))
  // with matrix positions ordered by i - j
  std::vector<Vec> basis;
  std::vector<std::size_t> basis_degree;
  std::vector<Mat> basis_image; // ψπ of each basis element
  std::vector<int> theta;
  std::vector<int> gamma; // ascending
  std::vector<long> beta; // beta[l] = γ_1 + ... + γ_l, beta[0] = 0
  bool gamma1_ok = true;  // γ_1 = 1 - k when k >= 2
};

ThetaProfile theta_profile(const GradedAlgebra &a);
int theta_of(const Mat &m); // min(i - j) over nonzero entries, 1-based positions cancel

struct ZetaRoot {
  bool found = false;
  bool exact = false; // lo == hi is the root
  Rational lo, hi;    // P(lo) <= 0 <= P(hi)
  std::string note;
  double value() const { return (lo.get_d() + hi.get_d()) / 2; }
};

Rational zeta_polynomial(const std::vector<int> &gamma, const Rational &z);
ZetaRoot zeta_root(const std::vector<int> &gamma);

struct PhiMax {
  double d = 0;
  std::vector<double> alpha;
  double search_best = 0; // best Φ found by the random-start search
};

double phi_value(const std::vector<double> &alpha);
bool in_omega(const std::vector<int> &gamma, const std::vector<double> &alpha, double tol = 1e-12);
PhiMax phi_max(const std::vector<int> &gamma, std::uint64_t seed = 0x5eed, unsigned starts = 20);

struct M2Classification {
  std::vector<std::size_t> t0, t1;               // semigroup elements
  std::vector<std::vector<std::size_t>> classes;  // classes of T0, ordered by first element
  std::size_t bar_t0 = 0;                         // index into classes
  std::vector<std::pair<Scalar, Scalar>> rows;    // per element of t0, under psi
  bool triangle = true;
  Quotient quotient;
  SplitIso psi; // ψ(I_{t̄0}) = <e11, e21> when T0 is nonempty
  std::vector<Subspace> ideals; // I_t per element of t0
};

M2Classification m2_classify(const GradedAlgebra &a);

struct M2Summary {
  std::size_t t0_size = 0, t1_size = 0, bar_t0_size = 0;
  std::vector<std::size_t> class_sizes;
  bool triangle = true;
  long a = 0, c = 0; // non-triangle: exponent = a + c + 2 sqrt(ac)
  std::string exact;
  double value = 0;
};

struct ExponentReport {
  std::size_t k = 0, r = 0;
  std::vector<int> gamma;
  std::string psi_choice;
  std::optional<ZetaRoot> zeta;
  Rational d_lo, d_hi; // enclosure of the upper bound
  double d = 0;
  std::vector<std::string> notes;
  std::optional<M2Summary> m2;
};

ExponentReport upper_bound_report(const GradedAlgebra &a);
ExponentReport m2_exponent(const GradedAlgebra &a);
// exact form of a + c + 2 sqrt(ac), e.g. "3+2*sqrt(2)"
std::string closed_form_exponent(long a, long c);

struct GrowthRow {
  std::size_t n = 0;
  std::uint64_t c = 0;
  double root = 0; // c^(1/n)
  double d = 0;
  bool cap_ok = true;                 // c <= (dim A)^(n+1)
  std::optional<Integer> witness_dim; // hook dimension of the witness shape, when built
  bool witness_ok = true;             // c >= witness_dim
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  std::string notice; // set when the budget truncated the table
};

GrowthTable growth_table(const GradedAlgebra &a, std::size_t n_max, const CodimOptions &opt = {});

} // namespace gpi
