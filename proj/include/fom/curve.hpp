#pragma once

// The curve x1^k + x2^k + x3^k = 0, l_j x1^k + x2^k + x_{j+3}^k = 0 (j = 1..3)
// seen through the linear forms in y_i = x_i^k.

#include <array>
#include <vector>

#include "fom/configspace.hpp"

namespace fom {

/// 0-based coordinate permutation: a monomial map sends x to
/// (c_1 x_{perm[0]}, ..., c_6 x_{perm[5]}).
using Perm6 = std::array<int, 6>;

/// Coefficient rows of the four defining equations in y-space.
std::array<std::array<CycElt, 6>, 4> equation_rows(const Triple& lambdas);

/// Whether x -> (c_i x_{perm[i]}) maps the curve with parameters `src` into
/// the one with parameters `dst`, given only powers[i] = c_i^k. Each target
/// equation is pulled back to y-space and tested for membership in the span
/// of the source equations.
bool monomial_maps_curve(const Perm6& perm, const std::array<CycElt, 6>& powers,
                         const Triple& src, const Triple& dst);

/// Branch value of the fibre where x_{i+1} vanishes: inf, 0, 1, l1, l2, l3.
SpherePoint branch_point(const Triple& lambdas, int i);

}  // namespace fom
