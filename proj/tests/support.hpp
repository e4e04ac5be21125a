#pragma once

// Test-side oracles and random generators. Nothing here calls into the
// library's own numeric code, so comparisons against it are independent.

#include <cmath>
#include <complex>
#include <random>

#include "fom/family.hpp"
#include "fom/moebius.hpp"

namespace fom::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int span = 6, int max_den = 4) {
  Rational q(uniform(-span, span), uniform(1, max_den));
  q.canonicalize();
  return q;
}

inline CycElt random_element(int n, int span = 3, int max_den = 2) {
  std::vector<Rational> c(euler_phi(n));
  for (auto& x : c) x = random_rational(span, max_den);
  return CycElt::from_coeffs(n, c);
}

inline CycElt random_nonzero(int n, int span = 3) {
  for (;;) {
    CycElt u = random_element(n, span);
    if (!u.is_zero()) return u;
  }
}

/// Plain double-precision evaluation of the power-basis coordinates.
inline std::complex<double> numeric(const CycElt& u) {
  const int n = u.conductor();
  std::complex<double> acc = 0;
  for (std::size_t j = 0; j < u.coeffs().size(); ++j)
    acc += u.coeffs()[j].get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / n);
  return acc;
}

inline Moebius random_moebius(int n) {
  for (;;) {
    CycElt a = random_element(n, 2, 1), b = random_element(n, 2, 1);
    CycElt c = random_element(n, 2, 1), d = random_element(n, 2, 1);
    if (!(a * d - b * c).is_zero()) return Moebius(a, b, c, d);
  }
}

/// mu random in Q(zeta_n), lambda = -mu * conj(mu); retried until valid.
inline FamilyParams random_family(int n, int k = 2) {
  for (;;) {
    CycElt mu = random_nonzero(n, 3);
    CycElt lambda = -(mu * conjugate(mu));
    try {
      return validate(lambda, mu, k).lift(n);
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace fom::test
