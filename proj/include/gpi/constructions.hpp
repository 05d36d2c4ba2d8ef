#pragma once

#include <string>
#include <vector>

#include "gpi/algebra.hpp"

namespace gpi {

// n x m matrices with product D ∘ P ∘ E; P is m x n with every row and column nonzero.
GradedAlgebra munn_algebra(std::size_t n, std::size_t m, const Mat &sandwich);

struct ExistenceInput {
  std::size_t k = 0, n = 0, m = 0;
  Field field;
  std::vector<Mat> row_idempotents;    // f'_i
  std::vector<Mat> column_idempotents; // f_j
  // Images φ(J10_{*j}) and φ(J01_{i*}): columns are φ of the module basis, as flattened k x k.
  std::vector<Mat> left_modules;  // size m, k^2 x dim
  std::vector<Mat> right_modules; // size n, k^2 x dim
};

struct Constructed {
  GradedAlgebra algebra;
  Mat psi; // k^2 x dim A, projection onto the semisimple part
  std::size_t k = 0;
};

Constructed existence_construct_full(const ExistenceInput &inp);
inline GradedAlgebra existence_construct(const ExistenceInput &inp) { return existence_construct_full(inp).algebra; }

struct DecompositionInput {
  std::size_t k = 0;
  Field field;
  ReesPresentation pres;                    // n x m band, sandwich m x n
  std::vector<std::vector<Subspace>> blocks; // B_ij, subspaces of flattened M_k
};

Constructed grading_from_decomposition(const DecompositionInput &inp);

// Right-zero-band graded algebras over M_2: t0 slots with left-ideal images grouped
// into classes of equal rows, then t1 slots with image M_2.
DecompositionInput m2_family_input(std::size_t t0, const std::vector<std::size_t> &class_sizes, std::size_t t1);
GradedAlgebra m2_family(std::size_t t0, const std::vector<std::size_t> &class_sizes, std::size_t t1);
// Row (α, β) used for the c-th class.
std::pair<long, long> m2_family_row(std::size_t c);

GradedAlgebra fixture(const std::string &name);
std::vector<std::string> fixture_names();

} // namespace gpi
