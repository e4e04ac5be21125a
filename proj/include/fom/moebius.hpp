#pragma once

// The projective line over Q(zeta_n): points, Moebius and anti-Moebius maps,
// cross-ratios and exhaustive enumeration of maps between six-point sets.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fom/cyclotomic.hpp"

namespace fom {

class SpherePoint {
 public:
  SpherePoint() = default;  // infinity
  SpherePoint(CycElt v) : value_(std::move(v)) {}  // NOLINT: finite points
  SpherePoint(long v) : value_(CycElt(v)) {}       // NOLINT: integer literals
  static SpherePoint infinity() { return SpherePoint(); }

  bool is_infinity() const { return !value_.has_value(); }
  /// Precondition: finite.
  const CycElt& value() const;

  SpherePoint lift(int m) const;
  std::string to_string() const;

  friend bool operator==(const SpherePoint& a, const SpherePoint& b);
  /// Infinity sorts first; finite points by CycElt order.
  friend std::strong_ordering operator<=>(const SpherePoint& a, const SpherePoint& b);

 private:
  std::optional<CycElt> value_;
};

SpherePoint conjugate(const SpherePoint& p);

/// z -> (a z + b) / (c z + d), or with z replaced by conj(z) when `anti`.
/// Stored projectively normalised: the first nonzero of a, b, c, d is 1.
class Moebius {
 public:
  Moebius(CycElt a, CycElt b, CycElt c, CycElt d, bool anti = false);
  static Moebius identity() { return Moebius(1, 0, 0, 1); }

  const CycElt& a() const { return a_; }
  const CycElt& b() const { return b_; }
  const CycElt& c() const { return c_; }
  const CycElt& d() const { return d_; }
  bool anti() const { return anti_; }
  std::array<CycElt, 4> entries() const { return {a_, b_, c_, d_}; }

  SpherePoint operator()(const SpherePoint& z) const;

  /// (*this)(other(z)).
  Moebius operator*(const Moebius& other) const;
  Moebius inverse() const;
  bool is_identity() const { return *this == identity(); }

  Moebius lift(int m) const;
  std::string to_string() const;

  friend bool operator==(const Moebius& x, const Moebius& y);
  friend std::strong_ordering operator<=>(const Moebius& x, const Moebius& y);

 private:
  CycElt a_, b_, c_, d_;
  bool anti_;
};

/// [a,b,c,d] = T(d) for the unique Moebius T with T(a)=inf, T(b)=0, T(c)=1.
CycElt cross_ratio(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                   const SpherePoint& d);

/// Orbit of c under G = <1/z, z/(z-1)>, deduplicated and sorted.
std::vector<CycElt> g_orbit(const CycElt& c);

/// Whether the four points lie on a common generalized circle.
bool concircular(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                 const SpherePoint& d);

/// Unique Moebius T with T(src[i]) = dst[i].
Moebius moebius_from_triple(const std::array<SpherePoint, 3>& src,
                            const std::array<SpherePoint, 3>& dst);

using PointSet = std::vector<SpherePoint>;

/// Sorted, duplicate-free copy.
PointSet canonical_set(PointSet s);

/// All Moebius (anti = false) or anti-Moebius (anti = true) maps T with
/// T(S) = S', found by sending a fixed triple of S to each ordered triple of
/// S'. Sorted and duplicate-free.
std::vector<Moebius> set_maps(const PointSet& s, const PointSet& s_prime, bool anti);

}  // namespace fom
