#include "fom/curve.hpp"

#include "fom/linalg.hpp"

namespace fom {

std::array<std::array<CycElt, 6>, 4> equation_rows(const Triple& l) {
  std::array<std::array<CycElt, 6>, 4> rows;
  const std::array<CycElt, 4> first{CycElt(1), l[0], l[1], l[2]};
  for (int i = 0; i < 4; ++i) {
    rows[i].fill(CycElt(0));
    rows[i][0] = first[i];
    rows[i][1] = CycElt(1);
    rows[i][2 + i] = CycElt(1);
  }
  return rows;
}

bool monomial_maps_curve(const Perm6& perm, const std::array<CycElt, 6>& powers,
                         const Triple& src, const Triple& dst) {
  Matrix<CycElt> base;
  for (const auto& row : equation_rows(src)) base.append_row({row.begin(), row.end()});
  for (const auto& e : equation_rows(dst)) {
    std::vector<CycElt> pulled(6, CycElt(0));
    for (int j = 0; j < 6; ++j) pulled[perm[j]] += e[j] * powers[j];
    Matrix<CycElt> m = base;
    m.append_row(pulled);
    if (rank(m) != 4) return false;
  }
  return true;
}

SpherePoint branch_point(const Triple& l, int i) {
  switch (i) {
    case 0: return SpherePoint::infinity();
    case 1: return SpherePoint(CycElt(0));
    case 2: return SpherePoint(CycElt(1));
    default: return SpherePoint(l[i - 3]);
  }
}

}  // namespace fom
