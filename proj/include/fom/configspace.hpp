#pragma once

// Six-point configurations {inf, 0, 1, l1, l2, l3} and their equivalence
// under the Moebius group.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fom/error.hpp"
#include "fom/moebius.hpp"

namespace fom {

/// Rejection of a triple outside the parameter region.
class OmegaError : public Error {
 public:
  enum class Clause { EqualsZero, EqualsOne, Repeated };
  OmegaError(Clause c, const std::string& msg) : Error(msg), clause_(c) {}
  Clause clause() const { return clause_; }

 private:
  Clause clause_;
};

using Triple = std::array<CycElt, 3>;

class Configuration {
 public:
  const Triple& lambdas() const { return l_; }
  int conductor() const { return l_[0].conductor(); }
  /// inf, 0, 1, l1, l2, l3 in this order.
  PointSet points() const;

  friend Configuration make_config(const CycElt&, const CycElt&, const CycElt&);

 private:
  explicit Configuration(Triple l) : l_(std::move(l)) {}
  Triple l_;
};

/// Validates membership in the region: every li outside {0, 1}, pairwise
/// distinct. All three are lifted to a common conductor.
Configuration make_config(const CycElt& l1, const CycElt& l2, const CycElt& l3);

/// All triples equivalent to c: every ordered choice of three points sent to
/// (inf, 0, 1) followed by every ordering of the other three images. Sorted,
/// duplicate-free; 720 / |conformal symmetries| entries.
std::vector<Triple> u_orbit(const Configuration& c);

/// A Moebius map carrying the six points of c1 onto those of c2, if any.
std::optional<Moebius> equivalent(const Configuration& c1, const Configuration& c2);

struct Symmetries {
  std::vector<Moebius> conformal;
  std::vector<Moebius> anticonformal;
  /// anticonformal_squares[i] = anticonformal[i] o anticonformal[i].
  std::vector<Moebius> anticonformal_squares;
};

Symmetries symmetries(const Configuration& c);

struct Quadruple {
  std::array<SpherePoint, 4> points;
  CycElt cross_ratio;
};

/// The four-point subsets (in the order of points()) lying on a generalized
/// circle, each with its cross-ratio.
std::vector<Quadruple> concircular_quadruples(const Configuration& c);

}  // namespace fom
