#include "fom/galois.hpp"

#include <algorithm>
#include <set>

namespace fom {

std::vector<TableInstance> table_instances(const CycElt& lambda, const CycElt& mu) {
  const CycElt one(1);
  const CycElt zero(0);
  std::vector<TableInstance> out;

  for (int s : {1, -1}) {
    const CycElt sg(s);
    const CycElt inv_l = one / lambda;
    out.push_back({1, s, lambda, sg * mu, Moebius::identity()});
    out.push_back({2, s, inv_l, sg * mu / lambda, Moebius(inv_l, zero, zero, one)});
    out.push_back({3, s, inv_l, sg / mu, Moebius(zero, one, one, zero)});
    out.push_back({4, s, lambda, sg * lambda / mu, Moebius(zero, lambda, one, zero)});
  }

  // u = (1-mu)/(1+mu), v = (lambda+mu)/(lambda-mu)
  const CycElt u = (one - mu) / (one + mu);
  const CycElt v = (lambda + mu) / (lambda - mu);
  const CycElt uv = u * v;
  const CycElt inv_uv = one / uv;
  // R (z + mu)/(z - mu) and R (z - mu)/(z + mu)
  auto plus_over_minus = [&](const CycElt& r) { return Moebius(r, r * mu, one, -mu); };
  auto minus_over_plus = [&](const CycElt& r) { return Moebius(r, -r * mu, one, mu); };

  struct Shape {
    int row;
    CycElt sl, sm;
    bool negate_r;
    bool plus_over_minus;
  };
  const Shape shapes[] = {
      {5, uv, u, false, true},
      {6, inv_uv, one / v, false, true},
      {7, uv, -u, true, true},
      {8, inv_uv, -(one / v), true, true},
      {9, inv_uv, one / u, false, false},
      {10, uv, v, false, false},
      {11, inv_uv, -(one / u), true, false},
      {12, uv, -v, true, false},
  };
  for (const auto& sh : shapes) {
    CycElt r = sh.negate_r ? -sh.sm : sh.sm;
    out.push_back({sh.row, 0, sh.sl, sh.sm,
                   sh.plus_over_minus ? plus_over_minus(r) : minus_over_plus(r)});
  }
  std::sort(out.begin(), out.end(), [](const TableInstance& a, const TableInstance& b) {
    return a.row != b.row ? a.row < b.row : a.sign > b.sign;
  });
  return out;
}

bool SigmaClassification::matches_row(int row) const {
  return std::any_of(matched_rows.begin(), matched_rows.end(),
                     [row](const RowMatch& m) { return m.row == row; });
}

SigmaClassification classify_sigma(const FamilyParams& p_in, const GaloisElement& a) {
  const int n = a.conductor();
  const FamilyParams p = p_in.lift(n);
  SigmaClassification out{a, galois_apply(p.lambda, a), galois_apply(p.mu, a), {}, {}, {}, false};

  const PointSet src = p.config().points();
  const PointSet dst = make_config(out.sigma_lambda, out.sigma_mu, -out.sigma_mu).points();
  const PointSet dst_sorted = canonical_set(dst);

  std::vector<Moebius> table_maps;
  for (const auto& inst : table_instances(p.lambda, p.mu)) {
    if (inst.sigma_lambda != out.sigma_lambda || inst.sigma_mu != out.sigma_mu) continue;
    PointSet img;
    for (const auto& z : src) img.push_back(inst.witness(z));
    if (canonical_set(img) != dst_sorted)
      throw InternalError("table witness for row " + std::to_string(inst.row) +
                          " does not map the branch set");
    out.matched_rows.push_back({inst.row, inst.sign});
    table_maps.push_back(inst.witness.lift(n));
    if (!out.witness) out.witness = inst.witness.lift(n);
  }
  std::sort(table_maps.begin(), table_maps.end());
  table_maps.erase(std::unique(table_maps.begin(), table_maps.end()), table_maps.end());

  out.oracle_maps = set_maps(src, dst, false);
  out.brute_force_agree = table_maps == out.oracle_maps;
  if (!out.brute_force_agree)
    throw InternalError("classification table and enumeration disagree for sigma_" +
                        std::to_string(a.exponent()) + " (table " +
                        std::to_string(table_maps.size()) + " maps, enumeration " +
                        std::to_string(out.oracle_maps.size()) + ")");
  return out;
}

Subgroup stabilizer(const FamilyParams& p, int n) {
  Subgroup h;
  for (int a : units_mod(n))
    if (!classify_sigma(p, GaloisElement(n, a)).matched_rows.empty()) h.push_back(a);
  try {
    check_subgroup(h, n);
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("stabilizer is not a subgroup: ") + e.what());
  }
  return h;
}

ModuliResult field_of_moduli(const FamilyParams& p_in, int n) {
  const FamilyParams p = p_in.lift(n);
  ModuliResult r;
  r.conductor = n;
  r.stabilizer = stabilizer(p, n);
  r.moduli_field = fixed_field(r.stabilizer, n);

  r.hypothesis_r4_rational = (p.lambda * p.lambda).is_rational();

  const bool by_minpoly = !evaluate(min_poly(p.mu), -p.mu).is_zero();
  bool by_enumeration = true;
  for (int a : units_mod(n))
    if (galois_apply(p.mu, GaloisElement(n, a)) == -p.mu) by_enumeration = false;
  if (by_minpoly != by_enumeration)
    throw InternalError("negation hypothesis: minimal polynomial and enumeration disagree");
  r.hypothesis_no_negation = by_minpoly;

  Subgroup fix_both;
  for (int a : units_mod(n)) {
    GaloisElement g(n, a);
    if (galois_apply(p.lambda, g) == p.lambda && galois_apply(p.mu, g) == p.mu)
      fix_both.push_back(a);
  }
  r.min_def_field = fixed_field(fix_both, n);
  r.degree_over_moduli = r.min_def_field.degree() / r.moduli_field.degree();
  r.theorem_applies = r.hypothesis_r4_rational && r.hypothesis_no_negation;
  if (r.theorem_applies && r.degree_over_moduli != 2)
    throw InternalError("both hypotheses hold but Q(lambda, mu) has degree " +
                        std::to_string(r.degree_over_moduli) + " over the field of moduli");
  return r;
}

}  // namespace fom
