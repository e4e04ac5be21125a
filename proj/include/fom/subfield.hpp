#pragma once

#include <vector>

#include "fom/cyclotomic.hpp"

namespace fom {

/// Subgroup of (Z/n)^*, kept sorted.
using Subgroup = std::vector<int>;

/// Distinct Galois conjugates sigma_a(u), a in (Z/n)^*, n = u.conductor().
std::vector<CycElt> galois_orbit(const CycElt& u);

/// Monic minimal polynomial over Q: prod (x - c) over the distinct conjugates.
QPoly min_poly(const CycElt& u);

/// p(u) computed exactly in the field of u.
CycElt evaluate(const QPoly& p, const CycElt& u);

/// {a in (Z/n)^* : sigma_a(u) = u}, with u viewed in Q(zeta_n).
Subgroup element_stabilizer(const CycElt& u, int n);

/// Throws PreconditionError unless h is a subgroup of (Z/n)^*.
void check_subgroup(const Subgroup& h, int n);

/// Preimage of h under (Z/m)^* -> (Z/n)^*, n | m.
Subgroup lift_subgroup(const Subgroup& h, int n, int m);

struct Subfield {
  int conductor = 1;
  Subgroup subgroup;
  CycElt primitive;
  QPoly minpoly;

  int degree() const { return minpoly.degree(); }
  /// x lies in this field iff it is fixed by every element of the subgroup.
  bool contains(const CycElt& x) const;
};

/// Fixed field of h <= (Z/n)^*, with a primitive element found as the
/// h-trace of small power-basis seeds.
Subfield fixed_field(const Subgroup& h, int n, int seed_budget = 400);

/// Q(x) as a Subfield of Q(zeta_n).
Subfield generated_field(const CycElt& x, int n);

/// Field equality by comparing fixing subgroups at a common conductor.
bool same_field(const Subfield& a, const Subfield& b);

}  // namespace fom
