#include "fom/subfield.hpp"

#include <algorithm>
#include <set>

#include "fom/error.hpp"

namespace fom {

std::vector<CycElt> galois_orbit(const CycElt& u) {
  const int n = u.conductor();
  std::vector<CycElt> out;
  for (int a : units_mod(n)) {
    CycElt v = galois_apply(u, GaloisElement(n, a));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

QPoly min_poly(const CycElt& u) {
  const int n = u.conductor();
  // coefficients of prod (x - c), low degree first, as field elements
  std::vector<CycElt> acc{CycElt(Rational(1), n)};
  for (const CycElt& c : galois_orbit(u)) {
    std::vector<CycElt> next(acc.size() + 1, CycElt(Rational(0), n));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= c * acc[i];
    }
    acc = std::move(next);
  }
  std::vector<Rational> q;
  q.reserve(acc.size());
  for (const auto& e : acc) {
    auto r = e.as_rational();
    if (!r) throw InternalError("minimal polynomial has a non-rational coefficient");
    q.push_back(*r);
  }
  return QPoly(std::move(q));
}

CycElt evaluate(const QPoly& p, const CycElt& u) {
  CycElt acc(Rational(0), u.conductor());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * u + CycElt(*it, u.conductor());
  return acc;
}

Subgroup element_stabilizer(const CycElt& u, int n) {
  CycElt v = u.lift(n);
  Subgroup h;
  for (int a : units_mod(n))
    if (galois_apply(v, GaloisElement(n, a)) == v) h.push_back(a);
  return h;
}

void check_subgroup(const Subgroup& h, int n) {
  auto units = units_mod(n);
  std::set<int> hs(h.begin(), h.end());
  if (hs.empty() || !hs.count(1 % n)) throw PreconditionError("subgroup must contain 1");
  for (int a : hs) {
    if (!std::binary_search(units.begin(), units.end(), a))
      throw PreconditionError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
    for (int b : hs)
      if (!hs.count(static_cast<int>(static_cast<long>(a) * b % n)))
        throw PreconditionError("subset is not closed under multiplication mod " +
                                std::to_string(n));
  }
}

Subgroup lift_subgroup(const Subgroup& h, int n, int m) {
  if (m % n) throw PreconditionError("lift_subgroup: n must divide m");
  Subgroup out;
  for (int a : units_mod(m))
    if (std::binary_search(h.begin(), h.end(), a % n)) out.push_back(a);
  return out;
}

bool Subfield::contains(const CycElt& x) const {
  CycElt v = x.lift(static_cast<int>(lcm_int(conductor, x.conductor())));
  int m = v.conductor();
  for (int a : lift_subgroup(subgroup, conductor, m))
    if (galois_apply(v, GaloisElement(m, a)) != v) return false;
  return true;
}

namespace {

std::vector<CycElt> seeds(int n, int budget) {
  const int phi = euler_phi(n);
  std::vector<CycElt> out;
  for (int j = 1; j < n && static_cast<int>(out.size()) < budget; ++j)
    out.push_back(CycElt::zeta(n, j));
  const long mults[] = {2, 3, -1, 5, -2, 7};
  for (long c : mults)
    for (int i = 1; i < phi; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (static_cast<int>(out.size()) >= budget) return out;
        out.push_back(CycElt::zeta(n, i) + CycElt(c) * CycElt::zeta(n, j));
      }
  return out;
}

}  // namespace

Subfield fixed_field(const Subgroup& h_in, int n, int seed_budget) {
  Subgroup h = h_in;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  check_subgroup(h, n);
  const int phi = euler_phi(n);
  const int target = phi / static_cast<int>(h.size());
  if (target == 1) return {n, h, CycElt(Rational(1), n), QPoly({-1, 1})};
  for (const CycElt& seed : seeds(n, seed_budget)) {
    CycElt t(Rational(0), n);
    for (int a : h) t += galois_apply(seed, GaloisElement(n, a));
    if (static_cast<int>(galois_orbit(t).size()) != target) continue;
    QPoly mp = min_poly(t);
    return {n, h, t, mp};
  }
  throw Error("fixed_field: no primitive element found within the seed budget");
}

Subfield generated_field(const CycElt& x, int n) {
  return fixed_field(element_stabilizer(x, n), n);
}

bool same_field(const Subfield& a, const Subfield& b) {
  int m = static_cast<int>(lcm_int(a.conductor, b.conductor));
  return lift_subgroup(a.subgroup, a.conductor, m) == lift_subgroup(b.subgroup, b.conductor, m);
}

}  // namespace fom
