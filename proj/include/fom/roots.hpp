#pragma once

#include <vector>

#include "fom/cyclotomic.hpp"

namespace fom {

/// All c in Q(zeta_m) with c^k = u (u must lie in Q(zeta_m)), sorted.
///
/// After scaling u by D^k so that it becomes integral, any root is an
/// algebraic integer of Z[zeta_m] and so has integer power-basis coordinates.
/// Those coordinates are recovered from the complex embeddings
/// sigma_a(c), a in (Z/m)^*: one k-th root of sigma_a(u) is chosen for each
/// pair {a, -a} (the partner is its conjugate), the Vandermonde system is
/// solved numerically, rounded, and every candidate is verified exactly.
/// An empty result therefore means no root exists in the field.
std::vector<CycElt> kth_roots(const CycElt& u, int k, int m);

/// k-th roots of unity contained in Q(zeta_m).
std::vector<CycElt> roots_of_unity(int k, int m);

}  // namespace fom
