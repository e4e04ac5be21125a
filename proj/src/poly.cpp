#include "fom/poly.hpp"

#include <algorithm>
#include <sstream>

#include "fom/error.hpp"

namespace fom {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v = c_;
  Rational lc = leading();
  for (auto& x : v) x /= lc;
  return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x = -x;
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {QPoly(), a};
  std::vector<Rational> q(dq + 1);
  const Rational& lb = b.leading();
  for (int i = dq; i >= 0; --i) {
    Rational f = r[i + db] / lb;
    q[i] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[i + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

GcdExt gcdext(const QPoly& a, const QPoly& b) {
  // Invariant: s0*a = r0, s1*a = r1 (mod b).
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    QPoly s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly()};
  Rational lc = r0.leading();
  QPoly inv = QPoly::constant(Rational(1) / lc);
  return {r0 * inv, s0 * inv};
}

Rational quadratic_discriminant(const QPoly& p) {
  if (p.degree() != 2) throw PreconditionError("not a quadratic: " + p.to_string());
  return p.coeff(1) * p.coeff(1) - 4 * p.coeff(0) * p.coeff(2);
}

}  // namespace fom
