#pragma once

// Which Galois elements sigma_a of Q(zeta_n) carry the family curve to a
// conformally equivalent one, and the resulting fields.

#include <optional>
#include <vector>

#include "fom/family.hpp"
#include "fom/subfield.hpp"

namespace fom {

/// One concrete line of the twelve-case classification: the values of
/// (sigma(lambda), sigma(mu)) it requires and the map T_sigma it predicts.
/// Cases 1-4 come with a sign for the +/- in sigma(mu); cases 5-12 have
/// sign 0.
struct TableInstance {
  int row;
  int sign;
  CycElt sigma_lambda;
  CycElt sigma_mu;
  Moebius witness;
};

/// All sixteen instances for the given (lambda, mu).
std::vector<TableInstance> table_instances(const CycElt& lambda, const CycElt& mu);

struct RowMatch {
  int row;
  int sign;
  friend bool operator==(const RowMatch&, const RowMatch&) = default;
};

struct SigmaClassification {
  GaloisElement sigma;
  CycElt sigma_lambda;
  CycElt sigma_mu;
  std::vector<RowMatch> matched_rows;
  std::optional<Moebius> witness;
  /// Every map found by brute-force enumeration between the two six-point sets.
  std::vector<Moebius> oracle_maps;
  bool brute_force_agree = false;

  bool matches_row(int row) const;
};

/// Throws InternalError if the table and the enumeration oracle disagree.
SigmaClassification classify_sigma(const FamilyParams& p, const GaloisElement& a);

/// {a : classify_sigma(p, a) matches some row}, verified closed.
Subgroup stabilizer(const FamilyParams& p, int n);

struct ModuliResult {
  int conductor = 1;
  Subgroup stabilizer;
  Subfield moduli_field;
  bool hypothesis_r4_rational = false;
  bool hypothesis_no_negation = false;
  /// Field generated by lambda and mu.
  Subfield min_def_field;
  int degree_over_moduli = 0;
  /// Both hypotheses hold, so Q(lambda, mu) is a minimal field of definition.
  bool theorem_applies = false;
};

ModuliResult field_of_moduli(const FamilyParams& p, int n);

}  // namespace fom
