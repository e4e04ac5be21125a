#include "fom/approx.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "fom/error.hpp"

namespace fom {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(BigFloat o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

bool ComplexBall::contains(double x, double y) const {
  double r = radius.to_double();
  return std::abs(re.to_double() - x) <= r + 1e-300 && std::abs(im.to_double() - y) <= r + 1e-300;
}

ComplexBall approx(const CycElt& u, long bits) {
  if (bits < 8) throw PreconditionError("approx needs at least 8 bits");
  const int n = u.conductor();
  const auto& c = u.coeffs();
  const int phi = static_cast<int>(c.size());

  // Error model at working precision w (all roundings to nearest):
  //   angle 2*pi*j/n carries at most 20 * 2^-w absolute error, so each
  //   computed cos/sin is within 21 * 2^-w; each product c_j*cos adds
  //   relative rounding, giving <= 24 |c_j| 2^-w; the phi-term sum adds
  //   <= 2 phi S 2^-w with S = sum |c_j|.  Total <= (32 + 2 phi)(S + 1) 2^-w.
  BigFloat s_upper(64);
  BigFloat tmp(64);
  for (const auto& cj : c) {
    mpfr_set_q(tmp.get(), cj.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDU);
    mpfr_add(s_upper.get(), s_upper.get(), tmp.get(), MPFR_RNDU);
  }
  mpfr_add_ui(s_upper.get(), s_upper.get(), 1, MPFR_RNDU);
  mpfr_mul_ui(s_upper.get(), s_upper.get(), 32 + 2 * phi, MPFR_RNDU);
  long log_e = mpfr_get_exp(s_upper.get());  // s_upper < 2^log_e
  long w = bits + 2 + std::max(0L, log_e) + 8;

  ComplexBall ball{BigFloat(w), BigFloat(w), BigFloat(64)};
  BigFloat angle(w), cs(w), sn(w), cq(w), term(w);
  for (int j = 0; j < phi; ++j) {
    if (sgn(c[j]) == 0) continue;
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2UL * j, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(cq.get(), c[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), cq.get(), cs.get(), MPFR_RNDN);
    mpfr_add(ball.re.get(), ball.re.get(), term.get(), MPFR_RNDN);
    mpfr_mul(term.get(), cq.get(), sn.get(), MPFR_RNDN);
    mpfr_add(ball.im.get(), ball.im.get(), term.get(), MPFR_RNDN);
  }
  mpfr_set(ball.radius.get(), s_upper.get(), MPFR_RNDU);
  mpfr_mul_2si(ball.radius.get(), ball.radius.get(), -w, MPFR_RNDU);
  return ball;
}

int real_sign(const CycElt& u) {
  if (!is_real(u)) throw PreconditionError("real_sign of a non-real element: " + u.to_string());
  if (u.is_zero()) return 0;
  if (auto q = u.as_rational()) return sgn(*q);
  for (long bits = 32;; bits *= 2) {
    ComplexBall b = approx(u, bits);
    BigFloat lo(mpfr_get_prec(b.re.get())), hi(mpfr_get_prec(b.re.get()));
    mpfr_sub(lo.get(), b.re.get(), b.radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), b.re.get(), b.radius.get(), MPFR_RNDU);
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
}

long default_approx_bits() {
  if (const char* env = std::getenv("FOM_APPROX_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 8) return v;
  }
  return 64;
}

std::string approx_string(const CycElt& u, long bits, int digits) {
  ComplexBall b = approx(u, bits);
  std::ostringstream os;
  os << b.re.to_string(digits);
  if (mpfr_sgn(b.im.get()) < 0) {
    BigFloat m(b.im);
    mpfr_neg(m.get(), m.get(), MPFR_RNDN);
    os << " - " << m.to_string(digits) << "*i";
  } else {
    os << " + " << b.im.to_string(digits) << "*i";
  }
  return os.str();
}

}  // namespace fom
