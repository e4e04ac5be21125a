#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is stored in the power basis 1, z, ..., z^(phi(n)-1) of
// Q[x]/Phi_n(x). The embedding into C is fixed as z -> exp(2*pi*i/n); every
// notion of conjugation, realness and sign refers to it.
//
// Binary operations on elements of different conductors n, m embed both into
// Q(zeta_lcm(n,m)) through zeta_n = zeta_lcm^(lcm/n).

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fom/poly.hpp"

namespace fom {

int euler_phi(int n);
long gcd_int(long a, long b);
long lcm_int(long a, long b);
/// Units of Z/n in increasing order ({0} is not a unit; for n = 1 returns {0}).
std::vector<int> units_mod(int n);

/// Phi_n by the divisor recursion x^n - 1 = prod_{d | n} Phi_d.
QPoly cyclotomic_polynomial(int n);

/// Immutable per-conductor data shared by all elements of Q(zeta_n).
struct CyclotomicField {
  int n;
  int phi;
  QPoly modulus;
  /// powers[j] = coordinates of z^j reduced mod Phi_n, for 0 <= j < n.
  std::vector<std::vector<Rational>> powers;
};

/// Returns the (memoised, immutable) field data for conductor n >= 1.
std::shared_ptr<const CyclotomicField> cyclotomic_field(int n);

class GaloisElement;

class CycElt {
 public:
  /// Zero of Q.
  CycElt();
  CycElt(long v);  // NOLINT(google-explicit-constructor): integer literals
  CycElt(const Rational& q, int n = 1);

  /// zeta_n^power.
  static CycElt zeta(int n, long power = 1);
  /// Element with the given power-basis coordinates (length must be phi(n)).
  static CycElt from_coeffs(int n, std::vector<Rational> coeffs);
  /// Reduces an arbitrary polynomial in z modulo Phi_n.
  static CycElt from_poly(int n, const QPoly& p);

  int conductor() const { return field_->n; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Same element viewed in Q(zeta_m); m must be a multiple of conductor().
  CycElt lift(int m) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  CycElt inverse() const;
  CycElt pow(long e) const;

  friend CycElt operator+(const CycElt& a, const CycElt& b);
  friend CycElt operator-(const CycElt& a, const CycElt& b);
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  friend CycElt operator/(const CycElt& a, const CycElt& b);
  friend CycElt operator-(const CycElt& a);
  CycElt& operator+=(const CycElt& b) { return *this = *this + b; }
  CycElt& operator-=(const CycElt& b) { return *this = *this - b; }
  CycElt& operator*=(const CycElt& b) { return *this = *this * b; }
  CycElt& operator/=(const CycElt& b) { return *this = *this / b; }

  friend bool operator==(const CycElt& a, const CycElt& b);
  /// Total order: lexicographic on coordinates at the common conductor.
  /// Only transitive among elements that share a conductor.
  friend std::strong_ordering operator<=>(const CycElt& a, const CycElt& b);

  /// Polynomial in `z`, re-parsable by parse_element with the same conductor.
  std::string to_string() const;

 private:
  CycElt(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c);
  QPoly as_poly() const { return QPoly(c_); }

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;
};

/// sigma_a : zeta_n -> zeta_n^a, a a unit mod n.
class GaloisElement {
 public:
  GaloisElement(int n, long a);
  int conductor() const { return n_; }
  int exponent() const { return a_; }
  GaloisElement operator*(const GaloisElement& o) const;
  GaloisElement inverse() const;
  bool is_identity() const { return a_ == 1 % n_; }
  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

 private:
  int n_;
  int a_;
};

/// Applies sigma_a. The element is first lifted to the conductor of g when
/// its own conductor divides it.
CycElt galois_apply(const CycElt& u, const GaloisElement& g);
/// Complex conjugation, i.e. sigma_{-1}.
CycElt conjugate(const CycElt& u);

inline bool is_real(const CycElt& u) { return conjugate(u) == u; }

/// Brings both operands to the lcm of their conductors.
int common_conductor(const CycElt& a, const CycElt& b);

}  // namespace fom
