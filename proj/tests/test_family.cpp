#include <doctest.h>

#include "fom/approx.hpp"
#include "fom/expr.hpp"
#include "fom/family.hpp"
#include "support.hpp"

using namespace fom;

namespace {

CycElt z(int n, long p = 1) { return CycElt::zeta(n, p); }

ValidationError::Clause rejection(const CycElt& l, const CycElt& m, int k) {
  try {
    validate(l, m, k);
  } catch (const ValidationError& e) {
    return e.clause();
  }
  FAIL("parameters were accepted");
  return ValidationError::Clause::KTooSmall;
}

}  // namespace

TEST_CASE("validation") {
  using C = ValidationError::Clause;
  CycElt mu3 = CycElt(2) * z(3);
  FamilyParams p = validate(-4, mu3, 2);
  CHECK(p.conductor() == 3);
  CHECK(rejection(-4, CycElt(2) * z(4), 2) == C::AxisDirection);
  CHECK(rejection(-4, mu3, 3) == C::KOdd);
  CHECK(rejection(-4, mu3, 0) == C::KTooSmall);
  CHECK(rejection(-4, CycElt(3) * z(3), 2) == C::ModulusMismatch);
  CHECK(rejection(Rational(-1, 4), CycElt(Rational(1, 2)) * z(3), 2) == C::RadiusNotAboveOne);
  CHECK(rejection(z(3), mu3, 2) == C::LambdaNotReal);
  CHECK(rejection(-4, CycElt(2), 2) == C::AxisDirection);
  CHECK(std::string(clause_name(C::CriticalRadius)) == "critical_radius");

  SUBCASE("critical radius at theta = pi/3") {
    // sqrt5 = 2(z5 + z5^4) + 1 inside Q(zeta_30); z^6 = zeta_5, z^5 = zeta_6
    CycElt sqrt5 = parse_element("2*(z^6 + z^24) + 1", 30);
    CHECK(sqrt5 * sqrt5 == CycElt(5));
    CycElt lambda = -(CycElt(3) + sqrt5) / CycElt(2);
    CycElt r = (CycElt(1) + sqrt5) / CycElt(2);
    CHECK(r * r == -lambda);
    CycElt mu = r * parse_element("z^5", 30);
    // r^2 - 1 = r for the golden ratio, and 2 r cos(pi/3) = r
    CHECK((lambda + CycElt(1) + mu + conjugate(mu)).is_zero());
    CHECK(rejection(lambda, mu, 2) == C::CriticalRadius);
  }

  SUBCASE("mu and -mu are interchangeable") {
    for (int n : {3, 5, 7, 8, 9, 12}) {
      for (int t = 0; t < 8; ++t) {
        CycElt mu = test::random_nonzero(n, 2);
        CycElt lambda = -(mu * conjugate(mu));
        bool a = true, b = true;
        try {
          validate(lambda, mu, 2);
        } catch (const ValidationError&) {
          a = false;
        }
        try {
          validate(lambda, -mu, 2);
        } catch (const ValidationError&) {
          b = false;
        }
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("genus") {
  CHECK(genus(2) == 17);
  CHECK(genus(4) == 1281);
  CHECK(genus(6) == 11665);
  CHECK_THROWS_AS(genus(1), PreconditionError);
}

TEST_CASE("analysis") {
  FamilyReport r = analyze(validate(-4, CycElt(2) * z(3), 2));
  CHECK(r.aut_trivial);
  REQUIRE(r.anti_symmetries.size() == 1);
  CHECK(r.anti_symmetries[0] == Moebius(0, -4, 1, 0, true));
  CHECK(r.anti_is_expected);
  CHECK(r.anti_squares_identity);
  CHECK(r.alpha_transport_verified);
  CHECK(r.involution_obstructed);
  CHECK(r.pseudo_real);
  CHECK(r.genus == 17);
  CHECK(r.alpha_constraints.alpha2 == CycElt(-4));
  CHECK(r.alpha_constraints.alpha3 == CycElt(1));
  CHECK(r.alpha_constraints.alpha6 == CycElt(-2) * z(3));

  FamilyReport r5 = analyze(validate(-4, CycElt(2) * z(5), 2));
  CHECK(r5.pseudo_real);
  CHECK(r5.genus == 17);
  FamilyReport r8 = analyze(validate(-4, CycElt(2) * z(8), 4));
  CHECK(r8.pseudo_real);
  CHECK(r8.genus == 1281);

  SUBCASE("family-wide properties") {
    for (int n : {5, 7, 8, 12}) {
      for (int t = 0; t < 2; ++t) {
        FamilyParams p = test::random_family(n, 2 * test::uniform(1, 3));
        FamilyReport rep = analyze(p);
        CHECK(rep.pseudo_real);
        CHECK(rep.anti_is_expected);
        CHECK(rep.anti_squares_identity);
        CHECK(rep.alpha_transport_verified);
        REQUIRE(rep.quadruples.size() == 3);
        CHECK(rep.quadruples[0].cross_ratio == p.lambda);
        CHECK(rep.quadruples[1].cross_ratio == CycElt(-1));
        CycElt l = p.lambda, t2 = p.mu + conjugate(p.mu), one(1);
        CycElt closed = -(l * l - CycElt(2) * l - t2 * t2 + one) / ((one - l + t2) * (one - l + t2));
        CHECK(rep.quadruples[2].cross_ratio == closed);
        // with lambda = -mu conj(mu) the cases 5-12 value of sigma(lambda) is -|u|^2
        CycElt u = (one - p.mu) / (one + p.mu);
        CycElt w = u * ((p.lambda + p.mu) / (p.lambda - p.mu));
        CHECK(w == -(u * conjugate(u)));
        CHECK(real_sign(w) == -1);
      }
    }
  }
}
