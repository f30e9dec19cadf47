#include "bicirc/certified.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <vector>

namespace bicirc {

namespace {

constexpr long kRadPrec = 64;

// Upper bound on the round-to-nearest error of mid at its precision,
// |mid| * 2^(1-prec), accumulated into rad.
void add_round_err(Mpfr& rad, mpfr_srcptr mid, long prec) {
  if (mpfr_zero_p(mid)) return;
  Mpfr e(kRadPrec);
  mpfr_abs(e.get(), mid, MPFR_RNDU);
  mpfr_mul_2si(e.get(), e.get(), 1 - prec, MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), e.get(), MPFR_RNDU);
}

void add_ternary_err(Mpfr& rad, mpfr_srcptr mid, long prec, int ternary) {
  if (ternary != 0) add_round_err(rad, mid, prec);
}

}  // namespace

CertifiedReal::CertifiedReal(long prec) : mid_(prec), rad_(kRadPrec) {}

CertifiedReal CertifiedReal::from_long(long v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_si(r.mid_.get(), v, MPFR_RNDN);
  add_ternary_err(r.rad_, r.mid_.get(), prec, t);
  return r;
}

CertifiedReal CertifiedReal::from_mpz(const mpz_class& v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_z(r.mid_.get(), v.get_mpz_t(), MPFR_RNDN);
  add_ternary_err(r.rad_, r.mid_.get(), prec, t);
  return r;
}

CertifiedReal CertifiedReal::from_mpq(const mpq_class& v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_q(r.mid_.get(), v.get_mpq_t(), MPFR_RNDN);
  add_ternary_err(r.rad_, r.mid_.get(), prec, t);
  return r;
}

CertifiedReal CertifiedReal::from_double(double v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_d(r.mid_.get(), v, MPFR_RNDN);
  add_ternary_err(r.rad_, r.mid_.get(), prec, t);
  return r;
}

CertifiedReal CertifiedReal::pi(long prec) {
  CertifiedReal r(prec);
  mpfr_const_pi(r.mid_.get(), MPFR_RNDN);
  add_round_err(r.rad_, r.mid_.get(), prec);
  return r;
}

CertifiedReal CertifiedReal::from_mpfr(const Mpfr& v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set(r.mid_.get(), v.get(), MPFR_RNDN);
  add_ternary_err(r.rad_, r.mid_.get(), prec, t);
  return r;
}

CertifiedReal CertifiedReal::from_mid_rad(const Mpfr& mid, const Mpfr& rad, long prec) {
  CertifiedReal r = from_mpfr(mid, prec);
  Mpfr e(kRadPrec);
  mpfr_abs(e.get(), rad.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), e.get(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_endpoints(const Mpfr& lo, const Mpfr& up, long prec) {
  assert(mpfr_cmp(lo.get(), up.get()) <= 0);
  CertifiedReal r(prec);
  mpfr_add(r.mid_.get(), lo.get(), up.get(), MPFR_RNDN);
  mpfr_div_2si(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
  Mpfr d1(kRadPrec), d2(kRadPrec);
  mpfr_sub(d1.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_sub(d2.get(), up.get(), r.mid_.get(), MPFR_RNDU);
  mpfr_max(r.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
  if (mpfr_sgn(r.rad_.get()) < 0) mpfr_set_zero(r.rad_.get(), 1);
  return r;
}

Mpfr CertifiedReal::lower() const {
  Mpfr t(mid_.prec());
  mpfr_sub(t.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return t;
}

Mpfr CertifiedReal::upper() const {
  Mpfr t(mid_.prec());
  mpfr_add(t.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return t;
}

bool CertifiedReal::contains_zero() const {
  return mpfr_sgn(lower().get()) <= 0 && mpfr_sgn(upper().get()) >= 0;
}

bool CertifiedReal::certainly_positive() const { return mpfr_sgn(lower().get()) > 0; }

bool CertifiedReal::certainly_negative() const { return mpfr_sgn(upper().get()) < 0; }

bool CertifiedReal::certainly_less(const CertifiedReal& o) const {
  return mpfr_cmp(upper().get(), o.lower().get()) < 0;
}

bool CertifiedReal::certainly_greater_than(long v) const {
  return mpfr_cmp_si(lower().get(), v) > 0;
}

bool CertifiedReal::certainly_less_than(long v) const {
  return mpfr_cmp_si(upper().get(), v) < 0;
}

double CertifiedReal::lower_double() const { return mpfr_get_d(lower().get(), MPFR_RNDD); }

double CertifiedReal::upper_double() const { return mpfr_get_d(upper().get(), MPFR_RNDU); }

bool CertifiedReal::unique_integer(mpz_class& out) const {
  Mpfr lo = lower(), up = upper();
  long ebits = 1;
  if (!mpfr_zero_p(lo.get())) ebits = std::max(ebits, static_cast<long>(mpfr_get_exp(lo.get())));
  if (!mpfr_zero_p(up.get())) ebits = std::max(ebits, static_cast<long>(mpfr_get_exp(up.get())));
  const long wp = std::max(prec(), ebits + 8);
  Mpfr cl(wp), fl(wp);
  mpfr_set(cl.get(), lo.get(), MPFR_RNDD);
  mpfr_ceil(cl.get(), cl.get());
  mpfr_set(fl.get(), up.get(), MPFR_RNDU);
  mpfr_floor(fl.get(), fl.get());
  if (mpfr_cmp(cl.get(), fl.get()) != 0) return false;
  mpfr_get_z(out.get_mpz_t(), cl.get(), MPFR_RNDN);
  return true;
}

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal r = *this;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_round_err(r.rad_, r.mid_.get(), r.prec());
  return r;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_round_err(r.rad_, r.mid_.get(), r.prec());
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Mpfr t(kRadPrec), u(kRadPrec);
  mpfr_abs(t.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_mul(t.get(), t.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_set(r.rad_.get(), t.get(), MPFR_RNDU);
  mpfr_abs(u.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_mul(u.get(), u.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), u.get(), MPFR_RNDU);
  mpfr_mul(u.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), u.get(), MPFR_RNDU);
  add_round_err(r.rad_, r.mid_.get(), r.prec());
  return r;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  Mpfr lb(kRadPrec);
  mpfr_abs(lb.get(), b.mid_.get(), MPFR_RNDD);
  mpfr_sub(lb.get(), lb.get(), b.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(lb.get()) <= 0)
    throw EnclosureUndefined("division by an enclosure containing zero");
  CertifiedReal r(std::max(a.prec(), b.prec()));
  mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |a'/b' - a/b| <= a.rad/lb + |a.mid| b.rad / (lb |b.mid|)
  Mpfr t(kRadPrec), u(kRadPrec), w(kRadPrec);
  mpfr_div(t.get(), a.rad_.get(), lb.get(), MPFR_RNDU);
  mpfr_abs(u.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_mul(u.get(), u.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_abs(w.get(), b.mid_.get(), MPFR_RNDD);
  mpfr_mul(w.get(), w.get(), lb.get(), MPFR_RNDD);
  mpfr_div(u.get(), u.get(), w.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), t.get(), u.get(), MPFR_RNDU);
  add_round_err(r.rad_, r.mid_.get(), r.prec());
  return r;
}

CertifiedReal CertifiedReal::abs() const {
  if (certainly_negative()) return -(*this);
  if (!contains_zero()) return *this;
  Mpfr lo = lower(), up = upper();
  mpfr_abs(lo.get(), lo.get(), MPFR_RNDU);
  Mpfr hi(static_cast<long>(mid_.prec()));
  mpfr_max(hi.get(), lo.get(), up.get(), MPFR_RNDU);
  Mpfr zero(static_cast<long>(mid_.prec()));
  return from_endpoints(zero, hi, prec());
}

CertifiedReal CertifiedReal::sqrt() const {
  Mpfr lo = lower(), up = upper();
  if (mpfr_sgn(up.get()) < 0)
    throw EnclosureUndefined("sqrt of a negative enclosure");
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  Mpfr slo(prec()), sup(prec());
  mpfr_sqrt(slo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(sup.get(), up.get(), MPFR_RNDU);
  return from_endpoints(slo, sup, prec());
}

CertifiedReal CertifiedReal::log() const {
  Mpfr lo = lower(), up = upper();
  if (mpfr_sgn(lo.get()) <= 0)
    throw EnclosureUndefined("log of an enclosure reaching 0");
  Mpfr llo(prec()), lup(prec());
  mpfr_log(llo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(lup.get(), up.get(), MPFR_RNDU);
  return from_endpoints(llo, lup, prec());
}

CertifiedReal CertifiedReal::exp() const {
  Mpfr lo = lower(), up = upper();
  Mpfr elo(prec()), eup(prec());
  mpfr_exp(elo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(eup.get(), up.get(), MPFR_RNDU);
  return from_endpoints(elo, eup, prec());
}

CertifiedReal CertifiedReal::cos() const {
  CertifiedReal r(prec());
  mpfr_cos(r.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  add_round_err(r.rad_, r.mid_.get(), r.prec());
  return r;
}

CertifiedReal CertifiedReal::sin() const {
  CertifiedReal r(prec());
  mpfr_sin(r.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  add_round_err(r.rad_, r.mid_.get(), r.prec());
  return r;
}

CertifiedReal CertifiedReal::mul_2si(long e) const {
  CertifiedReal r = *this;
  mpfr_mul_2si(r.mid_.get(), r.mid_.get(), e, MPFR_RNDN);
  mpfr_mul_2si(r.rad_.get(), r.rad_.get(), e, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::pow_ui(unsigned long n) const {
  CertifiedReal result = from_long(1, prec());
  if (n == 0) return result;
  CertifiedReal base = *this;
  while (n > 1) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result * base;
}

CertifiedReal CertifiedReal::inflate(const Mpfr& extra) const {
  CertifiedReal r = *this;
  Mpfr e(kRadPrec);
  mpfr_abs(e.get(), extra.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), e.get(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::inflate_d(double extra) const {
  Mpfr e(kRadPrec);
  mpfr_set_d(e.get(), extra, MPFR_RNDU);
  return inflate(e);
}

std::string CertifiedReal::mid_str(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, mid_.get());
  return buf.data();
}

std::string CertifiedReal::rad_str() const {
  if (mpfr_zero_p(rad_.get())) return "0";
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.3Rg", rad_.get());
  return buf;
}

std::string CertifiedReal::str(int digits) const {
  return mid_str(digits) + " +/- " + rad_str();
}

CertifiedComplex CertifiedComplex::from_real(const CertifiedReal& re) {
  return CertifiedComplex(re, CertifiedReal(re.prec()));
}

CertifiedComplex CertifiedComplex::operator-() const { return {-re_, -im_}; }

CertifiedComplex CertifiedComplex::conj() const { return {re_, -im_}; }

CertifiedComplex operator+(const CertifiedComplex& a, const CertifiedComplex& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

CertifiedComplex operator-(const CertifiedComplex& a, const CertifiedComplex& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

CertifiedComplex operator*(const CertifiedComplex& a, const CertifiedComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

CertifiedComplex operator/(const CertifiedComplex& a, const CertifiedComplex& b) {
  CertifiedReal den = b.norm();
  CertifiedComplex num = a * b.conj();
  return {num.re_ / den, num.im_ / den};
}

CertifiedReal CertifiedComplex::norm() const { return re_ * re_ + im_ * im_; }

CertifiedReal CertifiedComplex::abs() const { return norm().sqrt(); }

CertifiedComplex CertifiedComplex::scale(const CertifiedReal& f) const {
  return {re_ * f, im_ * f};
}

CertifiedComplex CertifiedComplex::mul_2si(long e) const {
  return {re_.mul_2si(e), im_.mul_2si(e)};
}

CertifiedComplex CertifiedComplex::pow_ui(unsigned long n) const {
  CertifiedComplex result = from_real(CertifiedReal::from_long(1, prec()));
  if (n == 0) return result;
  CertifiedComplex base = *this;
  while (n > 1) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result * base;
}

CertifiedComplex CertifiedComplex::sqrt_principal() const {
  const long p = prec();
  const bool im0 = im_.contains_zero();
  Mpfr relo = re_.lower();
  if (im0 && mpfr_sgn(relo.get()) <= 0)
    throw EnclosureUndefined("complex sqrt across the branch cut");

  // Lower bound on |zeta| over the box.
  Mpfr minmod(kRadPrec);
  mpfr_set_zero(minmod.get(), 1);
  if (mpfr_sgn(relo.get()) > 0) mpfr_set(minmod.get(), relo.get(), MPFR_RNDD);
  if (im_.certainly_positive()) {
    Mpfr imlo = im_.lower();
    mpfr_max(minmod.get(), minmod.get(), imlo.get(), MPFR_RNDD);
  } else if (im_.certainly_negative()) {
    Mpfr imup = im_.upper();
    mpfr_neg(imup.get(), imup.get(), MPFR_RNDD);
    mpfr_max(minmod.get(), minmod.get(), imup.get(), MPFR_RNDD);
  }
  if (mpfr_sgn(minmod.get()) <= 0)
    throw EnclosureUndefined("complex sqrt of a box reaching 0");

  // Principal sqrt of the exact midpoint, in ball arithmetic.
  CertifiedReal xm(p), ym(p);
  {
    CertifiedReal rr(p);
    mpfr_set(rr.mid_.get(), re_.mid_.get(), MPFR_RNDN);
    xm = rr;
    mpfr_set(rr.mid_.get(), im_.mid_.get(), MPFR_RNDN);
    ym = rr;
  }
  CertifiedReal h = (xm * xm + ym * ym).sqrt();
  CertifiedReal sr(p), si(p);
  if (mpfr_sgn(re_.mid_.get()) >= 0) {
    CertifiedReal g = ((h + xm).mul_2si(-1)).sqrt();
    sr = g;
    si = ym / g.mul_2si(1);
  } else {
    CertifiedReal d = ((h - xm).mul_2si(-1)).sqrt();
    sr = ym.abs() / d.mul_2si(1);
    si = (mpfr_sgn(im_.mid_.get()) >= 0) ? d : -d;
  }

  // Inflate by the mean-value bound |delta| / (2 sqrt(minmod)).
  Mpfr boxrad(kRadPrec);
  mpfr_add(boxrad.get(), re_.rad_.get(), im_.rad_.get(), MPFR_RNDU);
  Mpfr denom(kRadPrec);
  mpfr_sqrt(denom.get(), minmod.get(), MPFR_RNDD);
  mpfr_mul_2si(denom.get(), denom.get(), 1, MPFR_RNDD);
  mpfr_div(boxrad.get(), boxrad.get(), denom.get(), MPFR_RNDU);
  return {sr.inflate(boxrad), si.inflate(boxrad)};
}

}  // namespace bicirc
