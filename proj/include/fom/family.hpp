#pragma once

// The family with branch values inf, 0, 1, lambda = -r^2, mu = r e^{i theta},
// -mu, where r > 1, e^{i theta} not in {1, -1, i, -i}, r avoids the critical
// radius, and k is even.

#include <string>
#include <vector>

#include "fom/configspace.hpp"
#include "fom/curve.hpp"

namespace fom {

class ValidationError : public Error {
 public:
  enum class Clause {
    KTooSmall,
    KOdd,
    LambdaNotReal,
    RadiusNotAboveOne,
    ModulusMismatch,
    AxisDirection,
    CriticalRadius,
    CrossRatioOrbitsMeet,
  };
  ValidationError(Clause c, const std::string& msg) : Error(msg), clause_(c) {}
  Clause clause() const { return clause_; }

 private:
  Clause clause_;
};

/// Short stable identifier, e.g. "k_odd" or "critical_radius".
const char* clause_name(ValidationError::Clause c);

struct FamilyParams {
  CycElt lambda;
  CycElt mu;
  int k = 2;

  int conductor() const { return lambda.conductor(); }
  Triple lambdas() const { return {lambda, mu, -mu}; }
  Configuration config() const { return make_config(lambda, mu, -mu); }
  FamilyParams lift(int n) const { return {lambda.lift(n), mu.lift(n), k}; }
};

/// Checks every clause in a fixed order and throws ValidationError naming the
/// first one violated. Both elements are lifted to a common conductor.
FamilyParams validate(const CycElt& lambda, const CycElt& mu, int k);

/// 1 + (2k - 3) k^4.
long long genus(int k);

/// k-th powers of the anticonformal lift coefficients; no roots are taken.
struct AlphaConstraints {
  CycElt alpha2;  // = lambda
  CycElt alpha3;  // = 1
  CycElt alpha4;  // = lambda
  CycElt alpha5;  // = mu
  CycElt alpha6;  // = -mu
};

struct FamilyReport {
  bool aut_trivial = false;
  std::vector<Moebius> conformal;
  std::vector<Moebius> anti_symmetries;
  /// anti_symmetries is exactly {z -> lambda / conj(z)}.
  bool anti_is_expected = false;
  bool anti_squares_identity = false;
  AlphaConstraints alpha_constraints;
  /// The anticonformal lift with these k-th powers carries the curve to itself.
  bool alpha_transport_verified = false;
  /// An involutive lift needs alpha2 real with alpha2^k = lambda < 0.
  bool involution_obstructed = false;
  bool pseudo_real = false;
  long long genus = 0;
  std::vector<Quadruple> quadruples;
};

FamilyReport analyze(const FamilyParams& p);

}  // namespace fom
