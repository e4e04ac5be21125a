#include <doctest.h>

#include <set>

#include "fom/approx.hpp"
#include "fom/expr.hpp"
#include "fom/roots.hpp"
#include "fom/subfield.hpp"
#include "support.hpp"

using namespace fom;
using fom::test::numeric;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

Subgroup closure(std::vector<int> gens, int n) {
  std::set<int> h{1 % n};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : std::vector<int>(h.begin(), h.end()))
      for (int g : gens) {
        int y = static_cast<int>((static_cast<long>(x) * g) % n);
        if (h.insert(y).second) grew = true;
      }
  }
  return {h.begin(), h.end()};
}

bool is_rational_square(const Rational& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

}  // namespace

TEST_CASE("rational polynomials") {
  QPoly x = QPoly::monomial(1, 1);
  QPoly p = x * x + x - QPoly::constant(1);
  CHECK(p.to_string("x") == "x^2 + x - 1");
  DivMod qr = divmod(x * x * x - QPoly::constant(1), x - QPoly::constant(1));
  CHECK(qr.quotient == x * x + x + QPoly::constant(1));
  CHECK(qr.remainder.is_zero());
  CHECK(quadratic_discriminant(p) == 5);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).to_string("x") == "x - 1");
  CHECK(cyclotomic_polynomial(3).to_string("x") == "x^2 + x + 1");
  CHECK(cyclotomic_polynomial(8).to_string("x") == "x^4 + 1");
  CHECK(cyclotomic_polynomial(12).to_string("x") == "x^4 - x^2 + 1");
  for (int n = 1; n <= 40; ++n) CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}

TEST_CASE("element parsing") {
  CycElt s = parse_element("z + z^2", 3);
  CHECK(s.coeffs() == std::vector<Rational>{-1, 0});
  CHECK(parse_element("-4", 3) == CycElt(-4));
  CHECK(parse_element("2*z", 5) == CycElt(2) * CycElt::zeta(5));
  CHECK(parse_element("3/4", 7) == CycElt(Rational(3, 4)));
  CHECK(parse_element("z^-1", 5) == CycElt::zeta(5, 4));
  CHECK(parse_element("z^(-2)", 5) == CycElt::zeta(5, 3));
  CHECK(parse_element("conj(2*z)", 3) == CycElt(2) * CycElt::zeta(3, 2));
  CHECK(parse_element(" ( 1 + z ) * ( 1 - z ) ", 4) == CycElt(2));
  CHECK_THROWS_AS(parse_element("1 +", 3), ParseError);
  CHECK_THROWS_AS(parse_element("2*w", 3), ParseError);
  CHECK_THROWS_AS(parse_element("1/(z+z^2+1)", 3), DivisionByZero);
}

TEST_CASE("to_string re-parses") {
  for (int n : {1, 3, 5, 8, 12, 16}) {
    for (int i = 0; i < 20; ++i) {
      CycElt u = test::random_element(n);
      CHECK(parse_element(u.to_string(), n) == u);
    }
  }
}

TEST_CASE("field arithmetic") {
  CHECK(CycElt::zeta(3) * CycElt::zeta(3, 2) == CycElt(1));
  CHECK(CycElt(1) / CycElt::zeta(4) == -CycElt::zeta(4));
  CycElt prod = CycElt(2) * CycElt::zeta(5) * (CycElt(2) * CycElt::zeta(5, 4));
  CHECK(prod == CycElt(4));
  CHECK(close(numeric(prod), 4.0));
  CHECK_THROWS_AS(CycElt(1) / CycElt(0), DivisionByZero);

  // mixed conductors meet at the lcm
  CycElt i = CycElt::zeta(4);
  CycElt w = CycElt::zeta(3);
  CycElt s = i + w;
  CHECK(s.conductor() == 12);
  CHECK(close(numeric(s), numeric(i) + numeric(w)));
  CHECK(CycElt::zeta(8, 2) == CycElt::zeta(4));

  for (int n : {3, 5, 7, 8, 9, 12, 15}) {
    for (int t = 0; t < 15; ++t) {
      CycElt u = test::random_element(n);
      CycElt v = test::random_nonzero(n);
      CHECK(close(numeric(u * v), numeric(u) * numeric(v), 1e-7));
      CHECK(close(numeric(u / v), numeric(u) / numeric(v), 1e-6));
      CHECK((u / v) * v == u);
      CHECK(v * v.inverse() == CycElt(1));
    }
  }
}

TEST_CASE("conjugation and galois action") {
  CHECK(conjugate(CycElt::zeta(5)) == CycElt::zeta(5, 4));
  CHECK(conjugate(CycElt(2) * CycElt::zeta(3)) == CycElt(2) * CycElt::zeta(3, 2));
  CHECK(conjugate(CycElt(Rational(7, 3))) == CycElt(Rational(7, 3)));
  CHECK(galois_apply(CycElt::zeta(16), GaloisElement(16, 3)) == CycElt::zeta(16, 3));
  CHECK(galois_apply(CycElt::zeta(8), GaloisElement(16, 3)) == CycElt::zeta(8, 3));
  CHECK_THROWS_AS(GaloisElement(8, 2), PreconditionError);

  SUBCASE("automorphism laws for n <= 16") {
    for (int n = 2; n <= 16; ++n) {
      const auto units = units_mod(n);
      for (int t = 0; t < 4; ++t) {
        CycElt u = test::random_element(n), v = test::random_element(n);
        CHECK(conjugate(conjugate(u)) == u);
        for (int a : units) {
          GaloisElement g(n, a);
          CHECK(galois_apply(u + v, g) == galois_apply(u, g) + galois_apply(v, g));
          CHECK(galois_apply(u * v, g) == galois_apply(u, g) * galois_apply(v, g));
          CHECK(galois_apply(CycElt(1), g) == CycElt(1));
          for (int b : units)
            CHECK(galois_apply(galois_apply(u, g), GaloisElement(n, b)) ==
                  galois_apply(u, GaloisElement(n, (a * b) % n)));
        }
        CHECK(real_sign(conjugate(u) * u) == (u.is_zero() ? 0 : 1));
      }
    }
  }
}

TEST_CASE("signs of real elements") {
  CHECK(real_sign(CycElt(-4)) == -1);
  CHECK(real_sign(CycElt(0)) == 0);
  CycElt golden = CycElt::zeta(5) + CycElt::zeta(5, 4);
  CHECK(numeric(golden).real() == doctest::Approx(0.6180339887));
  CHECK(real_sign(golden) == 1);
  CHECK(real_sign(golden - CycElt(Rational(618, 1000))) == 1);
  CHECK(real_sign(golden - CycElt(Rational(619, 1000))) == -1);
  CHECK_THROWS_AS(real_sign(CycElt::zeta(5)), PreconditionError);

  // (sqrt(5) - 1) / 2 - 0.6180339887 is about 5e-11: forces refinement
  CycElt tiny = golden - CycElt(Rational(6180339887L, 10000000000L));
  CHECK((std::sqrt(5.0L) - 1) / 2 - 0.6180339887L > 0);
  CHECK(real_sign(tiny) == 1);
}

TEST_CASE("certified approximation") {
  auto check_box = [](const CycElt& u, long bits) {
    ComplexBall b = approx(u, bits);
    auto z = numeric(u);
    CHECK(b.width() <= std::ldexp(1.0, -static_cast<int>(bits)));
    // the double oracle itself is only good to about S * 2^-50
    double s = 1;
    for (const auto& c : u.coeffs()) s += std::abs(c.get_d());
    double slack = s * std::ldexp(1.0, -48);
    CHECK(std::abs(b.re.to_double() - z.real()) <= b.radius.to_double() + slack);
    CHECK(std::abs(b.im.to_double() - z.imag()) <= b.radius.to_double() + slack);
    return b.width();
  };
  check_box(CycElt::zeta(4), 32);
  check_box(CycElt::zeta(3) + CycElt::zeta(3, 2), 32);
  ComplexBall b = approx(CycElt(2) * CycElt::zeta(5), 32);
  CHECK(b.re.to_double() == doctest::Approx(0.6180339887));
  CHECK(b.im.to_double() == doctest::Approx(1.9021130326));
  CHECK_THROWS_AS(approx(CycElt(1), 4), PreconditionError);
  for (int t = 0; t < 30; ++t) {
    CycElt u = test::random_element(test::uniform(1, 24));
    for (long bits : {8L, 16L, 24L, 40L}) {
      double w1 = approx(u, bits).width();
      double w2 = approx(u, bits + 8).width();
      CHECK(w2 <= w1);
      check_box(u, bits);
    }
  }
}

TEST_CASE("minimal polynomials") {
  CHECK(min_poly(CycElt::zeta(3)).to_string("x") == "x^2 + x + 1");
  CHECK(min_poly(CycElt(2) * CycElt::zeta(3)).to_string("x") == "x^2 + 2*x + 4");
  CHECK(min_poly(CycElt(-4)).to_string("x") == "x + 4");
  // hand oracle: (x - 2w)(x - 2w^2) = x^2 - 2(w + w^2) x + 4 w^3 with w + w^2 = -1
  std::complex<double> r = 2.0 * std::polar(1.0, 2 * M_PI / 3);
  CHECK(std::abs(r * r + 2.0 * r + 4.0) < 1e-12);

  for (int n : {3, 4, 5, 7, 8, 9, 12, 15, 16}) {
    for (int t = 0; t < 6; ++t) {
      CycElt u = test::random_element(n);
      QPoly m = min_poly(u);
      CHECK(evaluate(m, u).is_zero());
      CHECK(euler_phi(n) % m.degree() == 0);
    }
  }
}

TEST_CASE("fixed fields") {
  Subfield q = fixed_field({1, 2}, 3);
  CHECK(q.degree() == 1);
  Subfield k5 = fixed_field({1, 4}, 5);
  CHECK(k5.degree() == 2);
  CHECK(k5.contains(CycElt::zeta(5) + CycElt::zeta(5, 4)));
  CHECK(is_rational_square(quadratic_discriminant(k5.minpoly) / 5));
  CHECK(same_field(k5, generated_field(CycElt::zeta(5) + CycElt::zeta(5, 4), 5)));
  Subfield whole = fixed_field({1}, 5);
  CHECK(whole.minpoly == cyclotomic_polynomial(5));
  CHECK_THROWS_AS(fixed_field({1, 2}, 5), PreconditionError);

  SUBCASE("every subgroup for n <= 16") {
    for (int n = 2; n <= 16; ++n) {
      const auto units = units_mod(n);
      std::set<Subgroup> seen;
      for (int a : units)
        for (int b : units) seen.insert(closure({a, b}, n));
      for (const auto& h : seen) {
        Subfield f = fixed_field(h, n);
        CHECK(f.degree() * static_cast<int>(h.size()) == euler_phi(n));
        CHECK(evaluate(f.minpoly, f.primitive).is_zero());
        for (int a : units) {
          bool in_h = std::find(h.begin(), h.end(), a) != h.end();
          CHECK((galois_apply(f.primitive.lift(n), GaloisElement(n, a)) == f.primitive.lift(n)) == in_h);
        }
      }
    }
  }
}

TEST_CASE("lifting subgroups") {
  CHECK(lift_subgroup({1, 4}, 5, 10) == Subgroup{1, 9});
  CHECK(lift_subgroup({1}, 8, 16) == Subgroup{1, 9});
  CHECK(element_stabilizer(CycElt::zeta(8), 16) == Subgroup{1, 9});
}

TEST_CASE("k-th roots inside a cyclotomic field") {
  auto roots = kth_roots(CycElt(-4), 2, 8);
  CHECK(roots.size() == 2);
  CHECK(std::find(roots.begin(), roots.end(), CycElt(2) * CycElt::zeta(4)) != roots.end());
  CHECK(kth_roots(CycElt(2) * CycElt::zeta(8, 3), 2, 8).empty());
  auto r16 = kth_roots(CycElt(2) * CycElt::zeta(8, 3), 2, 16);
  REQUIRE(r16.size() == 2);
  CycElt sqrt2 = CycElt::zeta(8) + CycElt::zeta(8, 7);
  CHECK((r16[0] == sqrt2 * CycElt::zeta(16, 3) || r16[1] == sqrt2 * CycElt::zeta(16, 3)));
  CHECK(kth_roots(CycElt(2), 2, 1).empty());
  CHECK(kth_roots(CycElt(Rational(9, 4)), 2, 1).size() == 2);
  CHECK(kth_roots(CycElt(-8), 3, 1) == std::vector<CycElt>{CycElt(-2)});
  CHECK(roots_of_unity(2, 16).size() == 2);
  CHECK(roots_of_unity(4, 16).size() == 4);
  CHECK(roots_of_unity(4, 5).size() == 2);
  CHECK(roots_of_unity(6, 12).size() == 6);

  for (int m : {3, 4, 5, 8, 12, 16}) {
    for (int k : {2, 4}) {
      for (int t = 0; t < 3; ++t) {
        CycElt c = test::random_nonzero(m, 2);
        auto rs = kth_roots(c.pow(k), k, m);
        CHECK(std::find(rs.begin(), rs.end(), c) != rs.end());
        CHECK(rs.size() == roots_of_unity(k, m).size());
        for (const auto& r : rs) CHECK(r.pow(k) == c.pow(k));
      }
    }
  }
}
