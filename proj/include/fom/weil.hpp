#pragma once

// Monomial isomorphisms between curves of the family, their Galois twists,
// and the cocycle condition f_{ts} = (f_s)^t o f_t on cyclic groups.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fom/curve.hpp"
#include "fom/family.hpp"

namespace fom {

/// [x1 : ... : x6] -> [c1 x_{perm[0]+1} : ... : c6 x_{perm[5]+1}].
/// Kept in projective normal form with scales[0] = 1.
struct MonomialIso {
  Perm6 perm;
  std::array<CycElt, 6> scales;
  int k = 2;

  MonomialIso(Perm6 perm, std::array<CycElt, 6> scales, int k);
  static MonomialIso identity(int k);

  bool is_identity() const;
  /// c_i^k, the data the curve actually sees.
  std::array<CycElt, 6> powers() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIso& a, const MonomialIso& b);
};

/// sigma_t applied to every scale.
MonomialIso twist(const MonomialIso& f, const GaloisElement& t);

/// g^t o f.
MonomialIso compose_twist(const MonomialIso& g, const MonomialIso& f, const GaloisElement& t);

/// Whether f maps the curve of (lambda, mu) onto that of (sigma_a lambda, sigma_a mu).
/// The conductor of p must divide that of a.
bool transports_curve(const MonomialIso& f, const FamilyParams& p, const GaloisElement& a);

struct LiftResult {
  Perm6 perm{};
  /// Required values of c_i^k, normalised by c_1^k = 1.
  std::array<CycElt, 6> powers;
  std::vector<MonomialIso> isos;
  /// One line per power with no k-th root in Q(zeta_m).
  std::vector<std::string> missing_radicals;
};

/// Every monomial f over Q(zeta_m) with pi o f = T o pi from the curve of p
/// to its sigma_a twist. The conductors of p and a must divide m; throws
/// PreconditionError if T does not carry one branch set onto the other.
LiftResult lift_to_monomial(const Moebius& t, const FamilyParams& p, const GaloisElement& a,
                            int m);

struct WeilDatum {
  FamilyParams params;
  int m = 1;
  int generator = 1;
  int order = 1;
  /// elements[j] = generator^j mod m, j < order.
  std::vector<int> elements;
  /// maps[j] = f_{generator^j}; maps[0] is the identity.
  std::vector<MonomialIso> maps;
  /// f_{generator^order} from the same recursion.
  std::optional<MonomialIso> closing;
  bool closes = false;
};

/// f_{g^j} = (f_{g^{j-1}})^g o f_gen. Throws PreconditionError if f_gen does
/// not transport the curve for sigma_g or g does not have order d.
WeilDatum extend_cyclic(const MonomialIso& f_gen, const GaloisElement& g, int d,
                        const FamilyParams& p);

struct CocycleResult {
  bool ok = false;
  /// (tau, sigma) exponents with f_{tau sigma} != (f_sigma)^tau o f_tau.
  std::optional<std::pair<int, int>> failing_pair;
  /// Exponent whose map does not transport the curve.
  std::optional<int> failing_transport;
};

CocycleResult cocycle_check(const WeilDatum& d);

}  // namespace fom
