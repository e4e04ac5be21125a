#include "fom/configspace.hpp"

#include <algorithm>

namespace fom {

PointSet Configuration::points() const {
  const int n = conductor();
  return {SpherePoint::infinity(), SpherePoint(CycElt(Rational(0), n)),
          SpherePoint(CycElt(Rational(1), n)), SpherePoint(l_[0]), SpherePoint(l_[1]),
          SpherePoint(l_[2])};
}

Configuration make_config(const CycElt& l1, const CycElt& l2, const CycElt& l3) {
  int n = static_cast<int>(lcm_int(lcm_int(l1.conductor(), l2.conductor()), l3.conductor()));
  Triple l{l1.lift(n), l2.lift(n), l3.lift(n)};
  for (int i = 0; i < 3; ++i) {
    const std::string name = "lambda" + std::to_string(i + 1);
    if (l[i].is_zero())
      throw OmegaError(OmegaError::Clause::EqualsZero, name + " = 0");
    if (l[i] == CycElt(1))
      throw OmegaError(OmegaError::Clause::EqualsOne, name + " = 1");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (l[i] == l[j])
        throw OmegaError(OmegaError::Clause::Repeated,
                         "lambda" + std::to_string(i + 1) + " = lambda" + std::to_string(j + 1));
  return Configuration(std::move(l));
}

std::vector<Triple> u_orbit(const Configuration& c) {
  const PointSet pts = c.points();
  const int n = c.conductor();
  const std::array<SpherePoint, 3> standard{SpherePoint::infinity(),
                                            SpherePoint(CycElt(Rational(0), n)),
                                            SpherePoint(CycElt(Rational(1), n))};
  std::vector<Triple> out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        if (i == j || j == k || i == k) continue;
        Moebius t = moebius_from_triple({pts[i], pts[j], pts[k]}, standard);
        std::array<CycElt, 3> rest;
        int r = 0;
        for (int m = 0; m < 6; ++m)
          if (m != i && m != j && m != k) rest[r++] = t(pts[m]).value().lift(n);
        std::array<int, 3> order{0, 1, 2};
        do {
          out.push_back({rest[order[0]], rest[order[1]], rest[order[2]]});
        } while (std::next_permutation(order.begin(), order.end()));
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Moebius> equivalent(const Configuration& c1, const Configuration& c2) {
  auto maps = set_maps(c1.points(), c2.points(), false);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

Symmetries symmetries(const Configuration& c) {
  Symmetries s;
  s.conformal = set_maps(c.points(), c.points(), false);
  s.anticonformal = set_maps(c.points(), c.points(), true);
  for (const auto& m : s.anticonformal) s.anticonformal_squares.push_back(m * m);
  return s;
}

std::vector<Quadruple> concircular_quadruples(const Configuration& c) {
  const PointSet pts = c.points();
  std::vector<Quadruple> out;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int d = b + 1; d < 6; ++d)
        for (int e = d + 1; e < 6; ++e) {
          CycElt cr = cross_ratio(pts[a], pts[b], pts[d], pts[e]);
          if (is_real(cr)) out.push_back({{pts[a], pts[b], pts[d], pts[e]}, cr});
        }
  return out;
}

}  // namespace fom
