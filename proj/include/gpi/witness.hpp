#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpi/exponent.hpp"
#include "gpi/pi.hpp"

namespace gpi {

struct AlternatingWitness {
  std::string construction; // "triangle" or "non-triangle"
  std::size_t n = 0;
  AlternatingPolynomial poly;
  std::vector<Vec> substitution;
  Vec value; // nonzero by construction, checked
  std::optional<Partition> shape;       // non-triangle: the column shape
  std::optional<YoungTableau> tableau;  // columns are the alternating sets
};

// Non-triangle shapes: λ with at most r rows, Σγλ <= 0 and λ_i even for i >= 2.
bool admissible_shape(const Partition &lambda, const std::vector<int> &gamma);
// The admissible λ ⊢ n of largest hook dimension (first in reverse-lexicographic order on ties).
std::optional<Partition> witness_shape(const std::vector<int> &gamma, std::size_t n);

// Triangle: 2 dim A. Non-triangle: the least n with an admissible λ ⊢ n of length r.
std::optional<std::size_t> smallest_admissible_n(const GradedAlgebra &a, const ExponentReport &report);

// nullopt when A/J(A) is not M_2 or the grading is outside the right-zero-band family.
std::optional<AlternatingWitness> build_alternating_nonidentity(const GradedAlgebra &a, const ExponentReport &report,
                                                                std::size_t n);

} // namespace gpi
