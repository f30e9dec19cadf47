#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "bicirc/errors.hpp"

namespace bicirc {

// Thrown by ball operations whose result is undefined on the full enclosure
// (division by a ball containing zero, log of a ball reaching 0, complex sqrt
// across the branch cut). Adaptive callers catch it and raise precision.
class EnclosureUndefined final : public Error {
 public:
  using Error::Error;
};

// RAII value wrapper for one mpfr number.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

// Rigorous midpoint-radius real: the represented value lies in
// [mid - rad, mid + rad]. The radius is tracked at a fixed small precision
// and every operation rounds it upward, so enclosures never lie.
class CertifiedReal {
 public:
  explicit CertifiedReal(long prec = 64);  // exact zero

  static CertifiedReal from_long(long v, long prec);
  static CertifiedReal from_mpz(const mpz_class& v, long prec);
  static CertifiedReal from_mpq(const mpq_class& v, long prec);
  static CertifiedReal from_double(double v, long prec);
  static CertifiedReal pi(long prec);
  // [lo, up] as a ball; endpoints interpreted exactly.
  static CertifiedReal from_endpoints(const Mpfr& lo, const Mpfr& up, long prec);
  static CertifiedReal from_mpfr(const Mpfr& v, long prec);
  static CertifiedReal from_mid_rad(const Mpfr& mid, const Mpfr& rad, long prec);

  long prec() const { return static_cast<long>(mid_.prec()); }
  bool is_exact() const { return mpfr_zero_p(rad_.get()); }

  Mpfr lower() const;  // rounded down
  Mpfr upper() const;  // rounded up
  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  // Strict comparisons that hold for every pair of represented values.
  bool certainly_less(const CertifiedReal& o) const;
  bool certainly_greater_than(long v) const;
  bool certainly_less_than(long v) const;

  double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }
  double lower_double() const;
  double upper_double() const;

  // If the enclosure contains exactly one integer, stores it and returns true.
  bool unique_integer(mpz_class& out) const;

  CertifiedReal operator-() const;
  friend CertifiedReal operator+(const CertifiedReal&, const CertifiedReal&);
  friend CertifiedReal operator-(const CertifiedReal&, const CertifiedReal&);
  friend CertifiedReal operator*(const CertifiedReal&, const CertifiedReal&);
  // Divisor enclosure must exclude zero; throws EnclosureUndefined.
  friend CertifiedReal operator/(const CertifiedReal&, const CertifiedReal&);

  CertifiedReal abs() const;
  // Enclosure is intersected with [0, inf); throws if entirely negative.
  CertifiedReal sqrt() const;
  CertifiedReal log() const;  // requires certainly_positive
  CertifiedReal exp() const;
  CertifiedReal cos() const;
  CertifiedReal sin() const;
  CertifiedReal mul_2si(long e) const;
  CertifiedReal pow_ui(unsigned long n) const;
  CertifiedReal inflate(const Mpfr& extra) const;  // radius += |extra|
  CertifiedReal inflate_d(double extra) const;

  std::string str(int digits = 12) const;  // "mid +/- rad", decimal
  std::string mid_str(int digits) const;
  std::string rad_str() const;

  mpfr_srcptr mid_raw() const { return mid_.get(); }
  mpfr_srcptr rad_raw() const { return rad_.get(); }

 private:
  friend class CertifiedComplex;
  Mpfr mid_;
  Mpfr rad_;
};

// Rectangular complex enclosure (a box containing the represented value).
class CertifiedComplex {
 public:
  explicit CertifiedComplex(long prec = 64) : re_(prec), im_(prec) {}
  CertifiedComplex(CertifiedReal re, CertifiedReal im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static CertifiedComplex from_real(const CertifiedReal& re);

  const CertifiedReal& re() const { return re_; }
  const CertifiedReal& im() const { return im_; }
  long prec() const { return re_.prec(); }

  CertifiedComplex operator-() const;
  CertifiedComplex conj() const;
  friend CertifiedComplex operator+(const CertifiedComplex&, const CertifiedComplex&);
  friend CertifiedComplex operator-(const CertifiedComplex&, const CertifiedComplex&);
  friend CertifiedComplex operator*(const CertifiedComplex&, const CertifiedComplex&);
  friend CertifiedComplex operator/(const CertifiedComplex&, const CertifiedComplex&);

  CertifiedReal norm() const;  // re^2 + im^2
  CertifiedReal abs() const;
  CertifiedComplex scale(const CertifiedReal& f) const;
  CertifiedComplex mul_2si(long e) const;
  CertifiedComplex pow_ui(unsigned long n) const;
  // Principal square root; the box must not meet the branch cut (-inf, 0].
  // Throws EnclosureUndefined otherwise.
  CertifiedComplex sqrt_principal() const;

 private:
  CertifiedReal re_, im_;
};

}  // namespace bicirc
