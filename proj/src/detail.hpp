#pragma once

// Internal helpers shared by the algebra sources.

#include <vector>

#include "gpi/algebra.hpp"

namespace gpi::detail {

// Monic minimal polynomial of z in a unital algebra, coefficients low to high.
std::vector<Scalar> minimal_polynomial(const Algebra &a, const Vec &z, const Vec &one);
std::vector<Scalar> roots_in_field(const std::vector<Scalar> &poly, Field f);
std::vector<Scalar> divide_linear(const std::vector<Scalar> &poly, const Scalar &c);
Vec poly_eval(const Algebra &a, const std::vector<Scalar> &poly, const Vec &z, const Vec &one);
Scalar poly_eval(const std::vector<Scalar> &poly, const Scalar &x);

} // namespace gpi::detail
