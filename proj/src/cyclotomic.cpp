#include "fom/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "fom/error.hpp"

namespace fom {

long gcd_int(long a, long b) { return std::gcd(a, b); }
long lcm_int(long a, long b) { return std::lcm(a, b); }

int euler_phi(int n) {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int> units_mod(int n) {
  if (n == 1) return {0};
  std::vector<int> u;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) u.push_back(a);
  return u;
}

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  QPoly num = QPoly::monomial(1, n) - QPoly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    num = divmod(num, cyclotomic_polynomial(d)).quotient;
  }
  return num;
}

namespace {

std::shared_ptr<const CyclotomicField> build_field(int n) {
  auto f = std::make_shared<CyclotomicField>();
  f->n = n;
  f->phi = euler_phi(n);
  f->modulus = cyclotomic_polynomial(n);
  const int phi = f->phi;
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  f->powers.reserve(n);
  for (int j = 0; j < n; ++j) {
    f->powers.push_back(cur);
    // multiply by x, then subtract top * Phi_n (monic)
    Rational top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->modulus.coeff(i);
  }
  return f;
}

}  // namespace

std::shared_ptr<const CyclotomicField> cyclotomic_field(int n) {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = build_field(n);
  cache.emplace(n, f);
  return f;
}

// ---------------------------------------------------------------------------

CycElt::CycElt() : CycElt(Rational(0), 1) {}
CycElt::CycElt(long v) : CycElt(Rational(v), 1) {}

CycElt::CycElt(const Rational& q, int n) : field_(cyclotomic_field(n)), c_(field_->phi) {
  c_[0] = q;
  c_[0].canonicalize();
}

CycElt::CycElt(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c)
    : field_(std::move(f)), c_(std::move(c)) {}

CycElt CycElt::zeta(int n, long power) {
  auto f = cyclotomic_field(n);
  long j = ((power % n) + n) % n;
  return CycElt(f, f->powers[j]);
}

CycElt CycElt::from_coeffs(int n, std::vector<Rational> coeffs) {
  auto f = cyclotomic_field(n);
  if (static_cast<int>(coeffs.size()) != f->phi)
    throw PreconditionError("coefficient vector length must equal phi(n)");
  for (auto& c : coeffs) c.canonicalize();
  return CycElt(f, std::move(coeffs));
}

CycElt CycElt::from_poly(int n, const QPoly& p) {
  auto f = cyclotomic_field(n);
  std::vector<Rational> c(f->phi);
  for (int j = 0; j <= p.degree(); ++j) {
    const Rational& cj = p.coeffs()[j];
    if (sgn(cj) == 0) continue;
    const auto& pw = f->powers[j % n];
    for (int i = 0; i < f->phi; ++i)
      if (sgn(pw[i]) != 0) c[i] += cj * pw[i];
  }
  return CycElt(f, std::move(c));
}

CycElt CycElt::lift(int m) const {
  const int n = conductor();
  if (m == n) return *this;
  if (m < 1 || m % n != 0)
    throw PreconditionError("cannot lift conductor " + std::to_string(n) + " to " +
                            std::to_string(m));
  auto f = cyclotomic_field(m);
  const int step = m / n;
  std::vector<Rational> c(f->phi);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    const auto& pw = f->powers[(j * step) % m];
    for (int i = 0; i < f->phi; ++i)
      if (sgn(pw[i]) != 0) c[i] += c_[j] * pw[i];
  }
  return CycElt(f, std::move(c));
}

bool CycElt::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycElt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

std::optional<Rational> CycElt::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

int common_conductor(const CycElt& a, const CycElt& b) {
  return static_cast<int>(lcm_int(a.conductor(), b.conductor()));
}

CycElt operator+(const CycElt& a, const CycElt& b) {
  if (a.conductor() != b.conductor()) {
    int m = common_conductor(a, b);
    return a.lift(m) + b.lift(m);
  }
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return CycElt(a.field_, std::move(c));
}

CycElt operator-(const CycElt& a) {
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
  return CycElt(a.field_, std::move(c));
}

CycElt operator-(const CycElt& a, const CycElt& b) { return a + (-b); }

CycElt operator*(const CycElt& a, const CycElt& b) {
  if (a.conductor() != b.conductor()) {
    int m = common_conductor(a, b);
    return a.lift(m) * b.lift(m);
  }
  const auto& f = *a.field_;
  const int phi = f.phi;
  std::vector<Rational> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + phi);
  for (int j = phi; j < 2 * phi - 1; ++j) {
    if (sgn(prod[j]) == 0) continue;
    const auto& pw = f.powers[j % f.n];
    for (int i = 0; i < phi; ++i)
      if (sgn(pw[i]) != 0) c[i] += prod[j] * pw[i];
  }
  return CycElt(a.field_, std::move(c));
}

CycElt CycElt::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto q = as_rational()) return CycElt(Rational(1) / *q, conductor());
  GcdExt ge = gcdext(as_poly(), field_->modulus);
  if (ge.gcd.degree() != 0) throw InternalError("cyclotomic modulus is not irreducible");
  return from_poly(conductor(), ge.s);
}

CycElt operator/(const CycElt& a, const CycElt& b) { return a * b.inverse(); }

CycElt CycElt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycElt result(Rational(1), conductor());
  CycElt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const CycElt& a, const CycElt& b) {
  if (a.conductor() != b.conductor()) {
    int m = common_conductor(a, b);
    return a.lift(m).c_ == b.lift(m).c_;
  }
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const CycElt& a, const CycElt& b) {
  if (a.conductor() != b.conductor()) {
    int m = common_conductor(a, b);
    return a.lift(m) <=> b.lift(m);
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycElt::to_string() const { return as_poly().to_string("z"); }

// ---------------------------------------------------------------------------

GaloisElement::GaloisElement(int n, long a) : n_(n) {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  long r = ((a % n) + n) % n;
  if (std::gcd(r, static_cast<long>(n)) != 1 && n != 1)
    throw PreconditionError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  a_ = static_cast<int>(r);
}

GaloisElement GaloisElement::operator*(const GaloisElement& o) const {
  if (o.n_ != n_) throw PreconditionError("Galois elements of different conductors");
  return GaloisElement(n_, static_cast<long>(a_) * o.a_ % n_);
}

GaloisElement GaloisElement::inverse() const {
  for (int b : units_mod(n_))
    if (static_cast<long>(a_) * b % n_ == 1 % n_) return GaloisElement(n_, b);
  return *this;
}

CycElt galois_apply(const CycElt& u, const GaloisElement& g) {
  const int n = g.conductor();
  if (u.conductor() != n) {
    if (n % u.conductor() != 0)
      throw PreconditionError("element conductor does not divide the Galois conductor");
    return galois_apply(u.lift(n), g);
  }
  auto f = cyclotomic_field(n);
  std::vector<Rational> c(f->phi);
  const auto& src = u.coeffs();
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (sgn(src[j]) == 0) continue;
    const auto& pw = f->powers[(static_cast<long>(j) * g.exponent()) % n];
    for (int i = 0; i < f->phi; ++i)
      if (sgn(pw[i]) != 0) c[i] += src[j] * pw[i];
  }
  return CycElt::from_coeffs(n, std::move(c));
}

CycElt conjugate(const CycElt& u) {
  const int n = u.conductor();
  if (n <= 2) return u;
  return galois_apply(u, GaloisElement(n, n - 1));
}

}  // namespace fom
