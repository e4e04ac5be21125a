#include "fom/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fom/error.hpp"

namespace fom {

namespace {

using cld = std::complex<long double>;

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

cld embed(const CycElt& u, long a) {
  const int m = u.conductor();
  cld acc = 0;
  const auto& c = u.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    long double ang = kTwoPi * static_cast<long double>((a * static_cast<long>(j)) % m) / m;
    acc += static_cast<long double>(c[j].get_d()) * cld(std::cos(ang), std::sin(ang));
  }
  return acc;
}

struct LU {
  std::vector<std::vector<cld>> a;
  std::vector<std::size_t> piv;

  explicit LU(std::vector<std::vector<cld>> m) : a(std::move(m)), piv(a.size()) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
      std::swap(a[p], a[c]);
      std::swap(piv[p], piv[c]);
      for (std::size_t r = c + 1; r < n; ++r) {
        a[r][c] /= a[c][c];
        for (std::size_t j = c + 1; j < n; ++j) a[r][j] -= a[r][c] * a[c][j];
      }
    }
  }

  std::vector<cld> solve(const std::vector<cld>& b) const {
    const std::size_t n = a.size();
    std::vector<cld> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = b[piv[i]];
      for (std::size_t j = 0; j < i; ++j) x[i] -= a[i][j] * x[j];
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= a[i][j] * x[j];
      x[i] /= a[i][i];
    }
    return x;
  }
};

std::vector<CycElt> rational_roots(const Integer& v, const Integer& denom, int k, int m) {
  // Q(zeta_m) = Q here; v is an integer.
  if (v == 0) return {CycElt(Rational(0), m)};
  if (k % 2 == 0 && v < 0) return {};
  Integer mag = abs(v), root;
  if (mpz_root(root.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return {};
  if (v < 0) root = -root;
  std::vector<CycElt> out{CycElt(Rational(root, denom), m)};
  if (k % 2 == 0) out.push_back(CycElt(Rational(-root, denom), m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CycElt> kth_roots(const CycElt& u_in, int k, int m) {
  if (k < 1) throw PreconditionError("kth_roots needs k >= 1");
  const CycElt u = u_in.lift(m);
  if (u.is_zero()) return {CycElt(Rational(0), m)};

  Integer denom = 1;
  for (const auto& c : u.coeffs()) denom = lcm(denom, Integer(c.get_den()));
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), denom.get_mpz_t(), static_cast<unsigned long>(k));
  const CycElt target = u * CycElt(Rational(scale), m);
  const CycElt denom_elt(Rational(denom), m);

  const int phi = euler_phi(m);
  if (phi == 1) return rational_roots(target.coeffs()[0].get_num(), denom, k, m);

  const std::vector<int> units = units_mod(m);
  std::vector<int> reps;
  for (int a : units)
    if (2 * a < m) reps.push_back(a);

  double combos = std::pow(static_cast<double>(k), static_cast<double>(reps.size()));
  if (combos > static_cast<double>(1 << 22))
    throw Error("kth_roots: search space too large (" + std::to_string(combos) + ")");

  std::vector<std::vector<cld>> vander(units.size(), std::vector<cld>(phi));
  for (std::size_t r = 0; r < units.size(); ++r)
    for (int j = 0; j < phi; ++j) {
      long double ang = kTwoPi * static_cast<long double>((static_cast<long>(units[r]) * j) % m) / m;
      vander[r][j] = cld(std::cos(ang), std::sin(ang));
    }
  const LU lu(vander);

  std::vector<std::vector<cld>> candidates(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    cld z = embed(target, reps[i]);
    long double mag = std::pow(std::abs(z), 1.0L / k);
    long double arg = std::arg(z);
    for (int j = 0; j < k; ++j) {
      long double t = (arg + kTwoPi * j) / k;
      candidates[i].push_back(cld(mag * std::cos(t), mag * std::sin(t)));
    }
  }
  auto unit_index = [&](int a) {
    return static_cast<std::size_t>(std::lower_bound(units.begin(), units.end(), a) - units.begin());
  };

  std::vector<CycElt> out;
  std::vector<int> choice(reps.size(), 0);
  for (;;) {
    std::vector<cld> rhs(units.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      cld w = candidates[i][choice[i]];
      rhs[unit_index(reps[i])] = w;
      rhs[unit_index(m - reps[i])] = std::conj(w);
    }
    std::vector<cld> x = lu.solve(rhs);
    bool integral = true;
    std::vector<Rational> coords(phi);
    for (int j = 0; j < phi && integral; ++j) {
      long double re = x[j].real();
      if (std::abs(re) > 1e15L)
        throw InternalError("kth_roots: coordinates exceed the numeric recovery range");
      long double rounded = std::round(re);
      if (std::abs(re - rounded) > 0.25L || std::abs(x[j].imag()) > 0.25L) integral = false;
      coords[j] = Rational(static_cast<long>(rounded));
    }
    if (integral) {
      CycElt c = CycElt::from_coeffs(m, coords);
      if (c.pow(k) == target) {
        c = c / denom_elt;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == k) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycElt> roots_of_unity(int k, int m) { return kth_roots(CycElt(Rational(1), m), k, m); }

}  // namespace fom
