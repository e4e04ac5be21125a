#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fom {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  QPoly monic() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  Rational operator()(const Rational& x) const;

  /// Human readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  QPoly quotient;
  QPoly remainder;
};

DivMod divmod(const QPoly& a, const QPoly& b);

/// Extended Euclid: returns g = gcd(a, b) (monic) and s with s*a = g (mod b).
struct GcdExt {
  QPoly gcd;
  QPoly s;
};
GcdExt gcdext(const QPoly& a, const QPoly& b);

/// Discriminant of a quadratic c0 + c1 x + c2 x^2.
Rational quadratic_discriminant(const QPoly& p);

}  // namespace fom
