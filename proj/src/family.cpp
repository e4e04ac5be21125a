#include "fom/family.hpp"

#include <algorithm>

#include "fom/approx.hpp"

namespace fom {

const char* clause_name(ValidationError::Clause c) {
  using C = ValidationError::Clause;
  switch (c) {
    case C::KTooSmall: return "k_too_small";
    case C::KOdd: return "k_odd";
    case C::LambdaNotReal: return "lambda_not_real";
    case C::RadiusNotAboveOne: return "radius_not_above_one";
    case C::ModulusMismatch: return "modulus_mismatch";
    case C::AxisDirection: return "axis_direction";
    case C::CriticalRadius: return "critical_radius";
    case C::CrossRatioOrbitsMeet: return "cross_ratio_orbits_meet";
  }
  return "unknown";
}

namespace {

bool orbits_meet(const CycElt& x, const CycElt& y) {
  auto ox = g_orbit(x);
  auto oy = g_orbit(y);
  for (const auto& v : ox)
    if (std::find(oy.begin(), oy.end(), v) != oy.end()) return true;
  return false;
}

}  // namespace

FamilyParams validate(const CycElt& lambda_in, const CycElt& mu_in, int k) {
  using C = ValidationError::Clause;
  if (k < 2) throw ValidationError(C::KTooSmall, "k must be at least 2");
  if (k % 2) throw ValidationError(C::KOdd, "k must be even");

  int n = common_conductor(lambda_in, mu_in);
  CycElt lambda = lambda_in.lift(n);
  CycElt mu = mu_in.lift(n);
  CycElt mu_bar = conjugate(mu);
  CycElt one(1);

  if (!is_real(lambda)) throw ValidationError(C::LambdaNotReal, "lambda is not real");
  if (real_sign(lambda + one) >= 0)
    throw ValidationError(C::RadiusNotAboveOne, "lambda + 1 >= 0, so r <= 1");
  if (mu * mu_bar != -lambda)
    throw ValidationError(C::ModulusMismatch, "mu * conj(mu) != -lambda");
  if (mu_bar == mu || mu_bar == -mu)
    throw ValidationError(C::AxisDirection, "e^{i theta} lies in {1, -1, i, -i}");
  // r^2 - 1 = -/+ 2 r cos(theta) exactly when r is a root of one of the two
  // critical quadratics; mu + conj(mu) = 2 r cos(theta).
  CycElt trace = mu + mu_bar;
  if ((lambda + one + trace).is_zero() || (lambda + one - trace).is_zero())
    throw ValidationError(C::CriticalRadius, "r equals the critical radius r_theta");

  FamilyParams p{lambda, mu, k};
  Configuration c = p.config();
  PointSet pts = c.points();
  // [inf,0,1,lambda], [inf,0,mu,-mu], [1,lambda,mu,-mu]
  CycElt q1 = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
  CycElt q2 = cross_ratio(pts[0], pts[1], pts[4], pts[5]);
  CycElt q3 = cross_ratio(pts[2], pts[3], pts[4], pts[5]);
  if (orbits_meet(q1, q2) || orbits_meet(q1, q3) || orbits_meet(q2, q3))
    throw ValidationError(C::CrossRatioOrbitsMeet,
                          "cross-ratios of the concircular quadruples are G-equivalent");
  return p;
}

long long genus(int k) {
  if (k < 2) throw PreconditionError("genus needs k >= 2");
  long long kk = k;
  return 1 + (2 * kk - 3) * kk * kk * kk * kk;
}

FamilyReport analyze(const FamilyParams& p) {
  FamilyReport r;
  Configuration c = p.config();
  Symmetries s = symmetries(c);
  r.conformal = s.conformal;
  r.aut_trivial = s.conformal.size() == 1 && s.conformal.front().is_identity();
  r.anti_symmetries = s.anticonformal;
  const Moebius expected(CycElt(0), p.lambda, CycElt(1), CycElt(0), true);
  r.anti_is_expected = s.anticonformal.size() == 1 && s.anticonformal.front() == expected;
  r.anti_squares_identity =
      !s.anticonformal_squares.empty() &&
      std::all_of(s.anticonformal_squares.begin(), s.anticonformal_squares.end(),
                  [](const Moebius& m) { return m.is_identity(); });

  const CycElt one(Rational(1), p.conductor());
  r.alpha_constraints = {p.lambda, one, p.lambda, p.mu, -p.mu};
  // x -> (conj x2, a2 conj x1, a3 conj x4, a4 conj x3, a5 conj x6, a6 conj x5):
  // the conjugated point lies on the curve with parameters conj(lambda_i).
  const Perm6 perm{1, 0, 3, 2, 5, 4};
  const auto& a = r.alpha_constraints;
  const std::array<CycElt, 6> powers{one, a.alpha2, a.alpha3, a.alpha4, a.alpha5, a.alpha6};
  const Triple l = p.lambdas();
  const Triple l_bar{conjugate(l[0]), conjugate(l[1]), conjugate(l[2])};
  r.alpha_transport_verified = monomial_maps_curve(perm, powers, l_bar, l);

  r.involution_obstructed = (p.k % 2 == 0) && real_sign(p.lambda) < 0;
  r.pseudo_real = r.aut_trivial && !r.anti_symmetries.empty() && r.involution_obstructed;
  r.genus = genus(p.k);
  r.quadruples = concircular_quadruples(c);
  return r;
}

}  // namespace fom
