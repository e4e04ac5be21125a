#include "fom/weil.hpp"

#include <algorithm>

#include "fom/linalg.hpp"
#include "fom/roots.hpp"

namespace fom {

MonomialIso::MonomialIso(Perm6 p, std::array<CycElt, 6> s, int k_) : perm(p), scales(std::move(s)), k(k_) {
  std::array<bool, 6> seen{};
  for (int i : perm) {
    if (i < 0 || i > 5 || seen[i]) throw PreconditionError("MonomialIso: perm is not a permutation");
    seen[i] = true;
  }
  for (const auto& c : scales)
    if (c.is_zero()) throw PreconditionError("MonomialIso: zero scale");
  const CycElt lead = scales[0];
  for (auto& c : scales) c = c / lead;
}

MonomialIso MonomialIso::identity(int k) {
  return MonomialIso({0, 1, 2, 3, 4, 5}, {CycElt(1), CycElt(1), CycElt(1), CycElt(1), CycElt(1), CycElt(1)}, k);
}

bool MonomialIso::is_identity() const { return *this == identity(k); }

std::array<CycElt, 6> MonomialIso::powers() const {
  std::array<CycElt, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = scales[i].pow(k);
  return out;
}

std::string MonomialIso::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 6; ++i) {
    if (i) s += " : ";
    s += "(" + scales[i].to_string() + ")*x" + std::to_string(perm[i] + 1);
  }
  return s + "]";
}

bool operator==(const MonomialIso& a, const MonomialIso& b) {
  if (a.perm != b.perm) return false;
  for (int i = 0; i < 6; ++i)
    if (a.scales[i] * b.scales[0] != b.scales[i] * a.scales[0]) return false;
  return true;
}

MonomialIso twist(const MonomialIso& f, const GaloisElement& t) {
  std::array<CycElt, 6> s;
  for (int i = 0; i < 6; ++i) s[i] = galois_apply(f.scales[i], t);
  return MonomialIso(f.perm, s, f.k);
}

MonomialIso compose_twist(const MonomialIso& g, const MonomialIso& f, const GaloisElement& t) {
  if (g.k != f.k) throw PreconditionError("compose_twist: different k");
  const MonomialIso gt = twist(g, t);
  Perm6 perm;
  std::array<CycElt, 6> s;
  for (int i = 0; i < 6; ++i) {
    perm[i] = f.perm[gt.perm[i]];
    s[i] = gt.scales[i] * f.scales[gt.perm[i]];
  }
  return MonomialIso(perm, s, f.k);
}

namespace {

Triple twisted_lambdas(const FamilyParams& p, const GaloisElement& a) {
  if (a.conductor() % p.conductor() != 0)
    throw PreconditionError("conductor of the parameters must divide that of sigma");
  const Triple l = p.lambdas();
  return {galois_apply(l[0], a), galois_apply(l[1], a), galois_apply(l[2], a)};
}

}  // namespace

bool transports_curve(const MonomialIso& f, const FamilyParams& p, const GaloisElement& a) {
  return monomial_maps_curve(f.perm, f.powers(), p.lambdas(), twisted_lambdas(p, a));
}

LiftResult lift_to_monomial(const Moebius& t, const FamilyParams& p, const GaloisElement& a, int m) {
  if (m % p.conductor() != 0 || m % a.conductor() != 0)
    throw PreconditionError("lift_to_monomial: conductors of the parameters and sigma must divide m");
  const Triple src = p.lambdas();
  const Triple dst = twisted_lambdas(p, a);

  // branch index j goes to image[j]; the fibre over branch j is {x_j = 0}.
  std::array<int, 6> image{};
  std::array<bool, 6> hit{};
  for (int j = 0; j < 6; ++j) {
    SpherePoint z = t(branch_point(src, j));
    int found = -1;
    for (int i = 0; i < 6; ++i)
      if (branch_point(dst, i) == z) found = i;
    if (found < 0 || hit[found])
      throw PreconditionError("lift_to_monomial: T does not map the branch set onto its twist");
    hit[found] = true;
    image[j] = found;
  }
  LiftResult r;
  for (int j = 0; j < 6; ++j) r.perm[image[j]] = j;

  // Annihilator of the source equations; a pulled-back target equation lies
  // in their span iff it pairs to zero with both annihilating vectors.
  Matrix<CycElt> base;
  for (const auto& row : equation_rows(src)) base.append_row({row.begin(), row.end()});
  const auto ann = nullspace(base);

  Matrix<CycElt> system;
  for (const auto& e : equation_rows(dst))
    for (const auto& w : ann) {
      std::vector<CycElt> eq(6, CycElt(0));
      for (int j = 0; j < 6; ++j) eq[j] = e[j] * w[r.perm[j]];
      system.append_row(eq);
    }
  const auto sol = nullspace(system);
  if (sol.size() != 1 || sol[0][0].is_zero())
    throw InternalError("lift_to_monomial: scale system has " + std::to_string(sol.size()) +
                        "-dimensional solution space");
  for (int i = 0; i < 6; ++i) {
    r.powers[i] = sol[0][i] / sol[0][0];
    if (r.powers[i].is_zero()) throw InternalError("lift_to_monomial: zero scale power");
  }

  std::array<std::vector<CycElt>, 6> choices;
  choices[0] = {CycElt(Rational(1), m)};
  for (int i = 1; i < 6; ++i) {
    choices[i] = kth_roots(r.powers[i], p.k, m);
    if (choices[i].empty())
      r.missing_radicals.push_back("x" + std::to_string(i + 1) + ": " + std::to_string(p.k) +
                                   "-th root of " + r.powers[i].to_string() +
                                   " is absent from Q(zeta_" + std::to_string(m) + ")");
  }
  if (!r.missing_radicals.empty()) return r;

  std::array<std::size_t, 6> idx{};
  for (;;) {
    std::array<CycElt, 6> s;
    for (int i = 0; i < 6; ++i) s[i] = choices[i][idx[i]];
    MonomialIso f(r.perm, s, p.k);
    if (!transports_curve(f, p, a)) throw InternalError("lift_to_monomial: lift fails transport");
    r.isos.push_back(std::move(f));
    int pos = 5;
    while (pos > 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
    if (pos == 0) break;
  }
  return r;
}

WeilDatum extend_cyclic(const MonomialIso& f_gen, const GaloisElement& g, int d, const FamilyParams& p) {
  if (d < 1) throw PreconditionError("extend_cyclic: order must be positive");
  const int m = g.conductor();
  GaloisElement acc(m, 1);
  for (int j = 0; j < d; ++j) {
    if (j > 0 && acc.is_identity()) throw PreconditionError("extend_cyclic: generator order is below d");
    acc = acc * g;
  }
  if (!acc.is_identity()) throw PreconditionError("extend_cyclic: generator order does not divide d");
  if (!transports_curve(f_gen, p, g))
    throw PreconditionError("extend_cyclic: generator map does not transport the curve");

  WeilDatum w;
  w.params = p;
  w.m = m;
  w.generator = g.exponent();
  w.order = d;
  GaloisElement e(m, 1);
  MonomialIso f = MonomialIso::identity(f_gen.k);
  for (int j = 0; j < d; ++j) {
    w.elements.push_back(e.exponent());
    w.maps.push_back(f);
    f = compose_twist(f, f_gen, g);
    e = e * g;
  }
  w.closing = f;
  w.closes = f.is_identity();
  return w;
}

CocycleResult cocycle_check(const WeilDatum& d) {
  CocycleResult r;
  for (int j = 0; j < d.order; ++j)
    if (!transports_curve(d.maps[j], d.params, GaloisElement(d.m, d.elements[j]))) {
      r.failing_transport = d.elements[j];
      return r;
    }
  for (int i = 0; i < d.order; ++i)
    for (int j = 0; j < d.order; ++j) {
      const GaloisElement tau(d.m, d.elements[i]);
      const MonomialIso rhs = compose_twist(d.maps[j], d.maps[i], tau);
      if (d.maps[(i + j) % d.order] != rhs) {
        r.failing_pair = {d.elements[i], d.elements[j]};
        return r;
      }
    }
  r.ok = true;
  return r;
}

}  // namespace fom
