#pragma once

#include <mpfr.h>

#include <string>

#include "fom/cyclotomic.hpp"

namespace fom {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(BigFloat o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t v_;
};

/// Square box centred at (re, im) with half-width `radius`, certified to
/// contain the embedded value of some element of Q(zeta_n).
struct ComplexBall {
  BigFloat re;
  BigFloat im;
  BigFloat radius;

  double width() const { return 2.0 * radius.to_double(); }
  bool contains(double x, double y) const;
};

/// Certified enclosure of u under zeta_n -> exp(2*pi*i/n), of width at most
/// 2^-bits. bits must be at least 8.
ComplexBall approx(const CycElt& u, long bits);

/// Sign of a real element. Exact zero test first, then interval refinement
/// with doubling precision. Throws PreconditionError when u is not real.
int real_sign(const CycElt& u);

/// Default precision for printed approximations; honours FOM_APPROX_BITS.
long default_approx_bits();

/// "0.6180339887 + 1.902113033*i" style rendering of approx(u, bits).
std::string approx_string(const CycElt& u, long bits, int digits = 12);

}  // namespace fom
