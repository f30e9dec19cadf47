#include "bicirc/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

#include "bicirc/dense_poly.hpp"

namespace bicirc {

namespace {

constexpr long kRadPrec = 64;

double log2_abs_mpz(const mpz_class& z) {
  if (z == 0) return -1e9;
  long e;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

// ---------------------------------------------------------------------------
// Point complex arithmetic at a fixed precision (round to nearest), used by
// the Aberth iteration. Rigor enters only at certification time.
// ---------------------------------------------------------------------------

struct Cp {
  Mpfr re, im;
  explicit Cp(long p) : re(p), im(p) {}
};

Cp cp_add(const Cp& a, const Cp& b) {
  Cp r(a.re.prec());
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cp cp_sub(const Cp& a, const Cp& b) {
  Cp r(a.re.prec());
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cp cp_mul(const Cp& a, const Cp& b) {
  const long p = a.re.prec();
  Cp r(p);
  Mpfr t1(p), t2(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  return r;
}

bool cp_is_zero(const Cp& a) {
  return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get());
}

Cp cp_div(const Cp& a, const Cp& b) {
  const long p = a.re.prec();
  Mpfr n2(p), t(p);
  mpfr_mul(n2.get(), b.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(n2.get(), n2.get(), t.get(), MPFR_RNDN);
  Cp bc(p);
  mpfr_set(bc.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(bc.im.get(), b.im.get(), MPFR_RNDN);
  const Cp num = cp_mul(a, bc);
  Cp r(p);
  mpfr_div(r.re.get(), num.re.get(), n2.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), num.im.get(), n2.get(), MPFR_RNDN);
  return r;
}

// v = poly(x), dv = poly'(x), Horner.
void cp_eval(const std::vector<mpz_class>& c, const Cp& x, Cp& v, Cp& dv) {
  const long p = x.re.prec();
  v = Cp(p);
  dv = Cp(p);
  Mpfr t(p);
  for (size_t i = c.size(); i-- > 0;) {
    dv = cp_mul(dv, x);
    dv = cp_add(dv, v);
    v = cp_mul(v, x);
    mpfr_set_z(t.get(), c[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(v.re.get(), v.re.get(), t.get(), MPFR_RNDN);
  }
}

// Simultaneous Aberth-Ehrlich iteration for a square-free polynomial.
// Returns false if it fails to converge at this precision.
bool aberth(const std::vector<mpz_class>& c, long P, std::vector<Cp>& x) {
  const long d = poly::degree(c);
  assert(d >= 1);
  const double lc = log2_abs_mpz(c.back());
  double radius_log2 = 0.0;
  for (long i = 0; i < d; ++i)
    if (c[static_cast<size_t>(i)] != 0)
      radius_log2 = std::max(
          radius_log2, (log2_abs_mpz(c[static_cast<size_t>(i)]) - lc) / double(d - i));
  radius_log2 += 1.0;
  if (radius_log2 > 900.0) radius_log2 = 900.0;
  const double R = std::exp2(radius_log2);

  x.clear();
  x.reserve(static_cast<size_t>(d));
  const double jitter = 1e-4 * double(P % 97) / 97.0;
  for (long i = 0; i < d; ++i) {
    const double th =
        2.0 * M_PI * (double(i) + 0.353) / double(d) + 1e-3 * double(i) + jitter;
    Cp xi(P);
    mpfr_set_d(xi.re.get(), R * std::cos(th), MPFR_RNDN);
    mpfr_set_d(xi.im.get(), R * std::sin(th), MPFR_RNDN);
    x.push_back(std::move(xi));
  }

  Mpfr thr(kRadPrec), cmag(kRadPrec), xmag(kRadPrec);
  const long maxit = 120 + 30 * d;
  for (long it = 0; it < maxit; ++it) {
    bool done = true;
    for (long i = 0; i < d; ++i) {
      Cp v(P), dv(P);
      cp_eval(c, x[static_cast<size_t>(i)], v, dv);
      if (cp_is_zero(v)) continue;
      if (cp_is_zero(dv)) {
        mpfr_add_d(x[static_cast<size_t>(i)].re.get(), x[static_cast<size_t>(i)].re.get(),
                   1e-3, MPFR_RNDN);
        done = false;
        continue;
      }
      Cp newton = cp_div(v, dv);
      Cp s(P);
      bool collision = false;
      for (long j = 0; j < d; ++j) {
        if (j == i) continue;
        Cp diff = cp_sub(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
        if (cp_is_zero(diff)) { collision = true; break; }
        Cp one(P);
        mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
        s = cp_add(s, cp_div(one, diff));
      }
      if (collision) {
        mpfr_add_d(x[static_cast<size_t>(i)].im.get(), x[static_cast<size_t>(i)].im.get(),
                   1e-3 * double(i + 1), MPFR_RNDN);
        done = false;
        continue;
      }
      Cp den(P);
      mpfr_set_ui(den.re.get(), 1, MPFR_RNDN);
      den = cp_sub(den, cp_mul(newton, s));
      Cp corr = cp_is_zero(den) ? newton : cp_div(newton, den);
      x[static_cast<size_t>(i)] = cp_sub(x[static_cast<size_t>(i)], corr);

      mpfr_hypot(cmag.get(), corr.re.get(), corr.im.get(), MPFR_RNDU);
      mpfr_hypot(xmag.get(), x[static_cast<size_t>(i)].re.get(),
                 x[static_cast<size_t>(i)].im.get(), MPFR_RNDD);
      mpfr_add_ui(thr.get(), xmag.get(), 1, MPFR_RNDD);
      mpfr_mul_2si(thr.get(), thr.get(), -(P - 16), MPFR_RNDD);
      if (mpfr_cmp(cmag.get(), thr.get()) > 0) done = false;
    }
    if (done && it > 0) return true;
  }
  return false;
}

// Taylor coefficients of c at the exact point x, in ball arithmetic:
// c(x + u) = sum b_m u^m.
std::vector<CertifiedComplex> taylor_shift(const std::vector<mpz_class>& c,
                                           const Cp& x, long P) {
  const long d = poly::degree(c);
  std::vector<CertifiedComplex> b;
  b.reserve(static_cast<size_t>(d) + 1);
  for (long i = 0; i <= d; ++i)
    b.emplace_back(CertifiedReal::from_mpz(c[static_cast<size_t>(i)], P),
                   CertifiedReal(P));
  const CertifiedComplex xb(CertifiedReal::from_mpfr(x.re, P),
                            CertifiedReal::from_mpfr(x.im, P));
  for (long m = 0; m < d; ++m)
    for (long j = d - 1; j >= m; --j)
      b[static_cast<size_t>(j)] = b[static_cast<size_t>(j)] +
                                  xb * b[static_cast<size_t>(j + 1)];
  return b;
}

// Rouche test on |u| = r: |b1| r > |b0| + sum_{m>=2} |b_m| r^m certifies
// exactly one root of c in the open disc of radius r around the shift point.
bool rouche_holds(const std::vector<CertifiedComplex>& b, const Mpfr& r_in, long P) {
  const CertifiedReal r = CertifiedReal::from_mpfr(r_in, P);
  const CertifiedReal lhs = b[1].abs() * r;
  CertifiedReal rhs = b[0].abs();
  CertifiedReal rp = r;
  for (size_t m = 2; m < b.size(); ++m) {
    rp = rp * r;
    rhs = rhs + b[m].abs() * rp;
  }
  return rhs.certainly_less(lhs);
}

struct PendingRoot {
  Cp x;
  Mpfr radius;
  int multiplicity;
};

bool certify_factor(const std::vector<mpz_class>& v, const std::vector<Cp>& xs,
                    long P, int mult, std::vector<PendingRoot>& out) {
  for (const Cp& x : xs) {
    std::vector<CertifiedComplex> b = taylor_shift(v, x, P);
    Mpfr r(kRadPrec);
    try {
      CertifiedReal q = b[0].abs() / b[1].abs();
      Mpfr qu = q.upper();
      mpfr_set(r.get(), qu.get(), MPFR_RNDU);
      mpfr_mul_2si(r.get(), r.get(), 3, MPFR_RNDU);
    } catch (const EnclosureUndefined&) {
      return false;
    }
    // Floor the radius at (1 + |x|) 2^(12 - P).
    Mpfr floor_r(kRadPrec);
    mpfr_hypot(floor_r.get(), x.re.get(), x.im.get(), MPFR_RNDU);
    mpfr_add_ui(floor_r.get(), floor_r.get(), 1, MPFR_RNDU);
    mpfr_mul_2si(floor_r.get(), floor_r.get(), 12 - P, MPFR_RNDU);
    mpfr_max(r.get(), r.get(), floor_r.get(), MPFR_RNDU);

    bool ok = false;
    for (int attempt = 0; attempt < 10; ++attempt) {
      if (rouche_holds(b, r, P)) { ok = true; break; }
      mpfr_mul_2si(r.get(), r.get(), 3, MPFR_RNDU);
    }
    if (!ok) return false;
    out.push_back(PendingRoot{x, r, mult});
  }
  return true;
}

bool all_disjoint(const std::vector<PendingRoot>& roots, long P) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const CertifiedComplex pi(CertifiedReal::from_mpfr(roots[i].x.re, P),
                                CertifiedReal::from_mpfr(roots[i].x.im, P));
      const CertifiedComplex pj(CertifiedReal::from_mpfr(roots[j].x.re, P),
                                CertifiedReal::from_mpfr(roots[j].x.im, P));
      Mpfr dist_lo = (pi - pj).abs().lower();
      Mpfr rsum(kRadPrec);
      mpfr_add(rsum.get(), roots[i].radius.get(), roots[j].radius.get(), MPFR_RNDU);
      // 3/2 > sqrt(2): the stored boxes are disjoint, not just the discs
      mpfr_mul_ui(rsum.get(), rsum.get(), 3, MPFR_RNDU);
      mpfr_div_2si(rsum.get(), rsum.get(), 1, MPFR_RNDU);
      if (mpfr_cmp(dist_lo.get(), rsum.get()) <= 0) return false;
    }
  return true;
}

}  // namespace

RootSet certified_roots(const std::vector<mpz_class>& coeffs, long prec) {
  std::vector<mpz_class> c = coeffs;
  poly::trim(c);
  if (c.empty()) throw ZeroPolynomial("roots of the zero polynomial");
  RootSet rs;
  if (poly::degree(c) == 0) return rs;

  const auto factors = poly::squarefree_decompose(c);
  std::vector<PendingRoot> pending;
  for (const auto& [v, mult] : factors) {
    std::vector<Cp> xs;
    if (!aberth(v, prec, xs))
      throw PrecisionExhausted("root iteration did not converge at " +
                               std::to_string(prec) + " bits");
    if (!certify_factor(v, xs, prec, mult, pending))
      throw PrecisionExhausted("root certification failed at " +
                               std::to_string(prec) + " bits");
  }
  if (!all_disjoint(pending, prec))
    throw PrecisionExhausted("root enclosures overlap at " + std::to_string(prec) +
                             " bits");

  long total = 0;
  for (const auto& pr : pending) {
    CertifiedComplex box(
        CertifiedReal::from_mid_rad(pr.x.re, pr.radius, prec),
        CertifiedReal::from_mid_rad(pr.x.im, pr.radius, prec));
    rs.roots.push_back(CertifiedRoot{box, pr.multiplicity});
    total += pr.multiplicity;
  }
  assert(total == poly::degree(c));
  return rs;
}

RootSet find_transform_roots(const ChebTransform& u, long prec) {
  if (u.degree() <= 0) return RootSet{};
  return certified_roots(u.u, prec);
}

CertifiedComplex cheb_T(unsigned long n, const CertifiedComplex& w) {
  const long p = w.prec();
  const CertifiedComplex one = CertifiedComplex::from_real(CertifiedReal::from_long(1, p));
  if (n == 0) return one;
  if (n == 1) return w;

  // z-form: T_n(w) = (z^n + z^-n)/2 with z + 1/z = 2w.
  try {
    const CertifiedComplex disc = w * w - one;
    const CertifiedComplex sq = disc.sqrt_principal();
    const CertifiedComplex z1 = w + sq;
    const CertifiedComplex z2 = w - sq;
    const CertifiedComplex z = z1.abs().certainly_less(z2.abs()) ? z2 : z1;
    Mpfr za_lo = z.abs().lower();
    if (mpfr_cmp_d(za_lo.get(), 1.0625) > 0) {
      const CertifiedComplex zn = z.pow_ui(n);
      return (zn + one / zn).mul_2si(-1);
    }
  } catch (const EnclosureUndefined&) {
    // fall through to the recurrence
  }

  CertifiedComplex tprev = one;
  CertifiedComplex tcur = w;
  for (unsigned long j = 2; j <= n; ++j) {
    CertifiedComplex tnext = (w * tcur).mul_2si(1) - tprev;
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return tcur;
}

namespace {

mpz_class abs_lead(const IntLaurentPoly& p) {
  assert(!p.is_zero());
  mpz_class a = p.coeff(p.hi());
  return abs(a);
}

// Product over the roots of the transform of p of |2 T_e(root) + shift2|,
// as a ball at precision P.
CertifiedReal transform_root_product(const IntLaurentPoly& p, unsigned long e,
                                     int shift_sign, long P) {
  const CertifiedComplex one = CertifiedComplex::from_real(CertifiedReal::from_long(1, P));
  CertifiedReal out = CertifiedReal::from_long(1, P);
  const RootSet rs = find_transform_roots(cheb_transform(p), P);
  for (const auto& root : rs.roots) {
    const CertifiedComplex t = cheb_T(e, root.value);
    const CertifiedComplex inner =
        (shift_sign >= 0) ? (t + one) : (t - one);
    const CertifiedReal factor = inner.mul_2si(1).abs();
    out = out * factor.pow_ui(static_cast<unsigned long>(root.multiplicity));
  }
  return out;
}

}  // namespace

ForestCount forest_count_chebyshev(const BicirculantSpec& spec, long precision_ceiling) {
  const SymmetricPolyPack pack = build_pack(spec);
  const GammaClass cls = classify(spec);
  const long n = spec.n;
  if (cls != GammaClass::G1 && n % 2 != 0)
    throw OddOrderForHalfClass("half flag set but n = " + std::to_string(n) +
                               " is odd");

  for (long P = 128; P <= precision_ceiling; P *= 2) {
    try {
      CertifiedReal f(P);
      if (cls == GammaClass::G1) {
        mpz_class an;
        mpz_pow_ui(an.get_mpz_t(), abs_lead(pack.p1).get_mpz_t(),
                   static_cast<unsigned long>(n));
        f = CertifiedReal::from_mpz(an, P);
        f = f * transform_root_product(pack.p1, static_cast<unsigned long>(n), -1, P);
      } else {
        const IntLaurentPoly& ps = pack.shifted(cls);
        mpz_class cn;
        mpz_class base = abs_lead(ps) * abs_lead(pack.p1);
        mpz_pow_ui(cn.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n / 2));
        f = CertifiedReal::from_mpz(cn, P);
        f = f * transform_root_product(ps, static_cast<unsigned long>(n / 2), +1, P);
        f = f * transform_root_product(pack.p1, static_cast<unsigned long>(n / 2), -1, P);
      }
      mpz_class out;
      if (f.unique_integer(out) && out >= 1) return ForestCount{out};
    } catch (const PrecisionExhausted&) {
    } catch (const EnclosureUndefined&) {
    }
  }
  throw PrecisionExhausted("chebyshev route did not pin an integer within " +
                           std::to_string(precision_ceiling) + " bits");
}

CertifiedReal mahler_roots(const IntLaurentPoly& p, long prec) {
  if (p.is_zero()) throw ZeroPolynomial("Mahler measure of the zero polynomial");
  const std::vector<mpz_class> q = p.shifted_coeffs();
  if (poly::degree(q) == 0) {
    mpz_class a = abs(q[0]);
    return CertifiedReal::from_mpz(a, prec);
  }

  std::vector<long> precisions;
  for (long P = 128; P < prec; P *= 2) precisions.push_back(P);
  if (precisions.empty() || precisions.back() != prec) precisions.push_back(prec);

  bool certified_once = false;
  for (long P : precisions) {
    RootSet rs;
    try {
      rs = certified_roots(q, P);
    } catch (const PrecisionExhausted&) {
      continue;
    }
    certified_once = true;
    mpz_class a = abs(q.back());
    CertifiedReal m = CertifiedReal::from_mpz(a, P);
    bool undecided = false;
    for (const auto& root : rs.roots) {
      const CertifiedReal amod = root.value.abs();
      if (amod.certainly_greater_than(1)) {
        m = m * amod.pow_ui(static_cast<unsigned long>(root.multiplicity));
      } else if (amod.certainly_less_than(1)) {
        continue;
      } else {
        undecided = true;
        break;
      }
    }
    if (!undecided) return m;
  }
  if (!certified_once)
    throw PrecisionExhausted("root certification failed up to " +
                             std::to_string(prec) + " bits");
  throw RootOnUnitCircle(
      "a root modulus could not be separated from 1 at " + std::to_string(prec) +
      " bits");
}

namespace {

// w0 + sum_j w_j cos(2 pi j t) over a ball t.
CertifiedReal cos_series_eval(const CertifiedReal& w0,
                              const std::vector<CertifiedReal>& w,
                              const CertifiedReal& t, const CertifiedReal& two_pi,
                              long P) {
  CertifiedReal acc = w0;
  for (size_t j = 1; j < w.size(); ++j) {
    if (!w[j].contains_zero() || !w[j].is_exact()) {
      const CertifiedReal arg = two_pi * CertifiedReal::from_long(static_cast<long>(j), P) * t;
      acc = acc + w[j] * arg.cos();
    }
  }
  return acc;
}

// Certified lower bound for min over t in [0, 1] of the even 1-periodic
// cosine series, by branch and bound on [0, 1/2]. Returns false when a
// positive bound cannot be certified.
bool cos_series_min_lower(const CertifiedReal& w0,
                          const std::vector<CertifiedReal>& w, double& m_lo_out) {
  const long P = 96;
  const CertifiedReal two_pi = CertifiedReal::pi(P).mul_2si(1);
  struct Node { unsigned long k; int depth; };
  std::vector<Node> stack{{0, 0}};
  double best_up = std::numeric_limits<double>::infinity();
  double finalized_min = std::numeric_limits<double>::infinity();
  long processed = 0;
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (++processed > 100000 || node.depth > 44) return false;
    // t in [k, k+1] / 2^(depth+1), halved again onto [0, 1/2].
    Mpfr mid(P), rad(P);
    mpfr_set_ui(mid.get(), 2 * node.k + 1, MPFR_RNDN);
    mpfr_mul_2si(mid.get(), mid.get(), -(node.depth + 2), MPFR_RNDN);
    mpfr_set_ui(rad.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(rad.get(), rad.get(), -(node.depth + 2), MPFR_RNDN);
    const CertifiedReal t = CertifiedReal::from_mid_rad(mid, rad, P);
    const CertifiedReal tc = CertifiedReal::from_mpfr(mid, P);
    best_up = std::min(best_up, cos_series_eval(w0, w, tc, two_pi, P).upper_double());
    const double lb = cos_series_eval(w0, w, t, two_pi, P).lower_double();
    if (lb >= 0.75 * best_up && lb > 0) {
      finalized_min = std::min(finalized_min, lb);
      continue;
    }
    stack.push_back(Node{2 * node.k, node.depth + 1});
    stack.push_back(Node{2 * node.k + 1, node.depth + 1});
  }
  if (!(finalized_min > 0) || !std::isfinite(finalized_min)) return false;
  m_lo_out = finalized_min;
  return true;
}

}  // namespace

CertifiedReal mahler_integral(const IntLaurentPoly& p, double tolerance) {
  if (p.is_zero()) throw ZeroPolynomial("Mahler measure of the zero polynomial");
  if (tolerance <= 0) throw ToleranceNotMet("tolerance must be positive");
  long pw = std::max<long>(96, static_cast<long>(-std::log2(tolerance)) + 48);
  if (p.is_constant()) {
    mpz_class a = abs(p.coeff(p.lo()));
    return CertifiedReal::from_mpz(a, pw);
  }

  // G = p(z) p(1/z); on the circle G(e^{2 pi i t}) = |p|^2, a positive real
  // trigonometric polynomial with integer coefficients.
  const IntLaurentPoly G = p * p.reversed();
  assert(G.palindromic());
  const long D = G.hi();
  if (D == 0) {
    // |p| is constant on the circle (p is a monomial)
    return CertifiedReal::from_mpz(G.coeff(0), pw).sqrt();
  }
  mpz_class offdiag_sum = 0;
  for (long e = 1; e <= D; ++e) offdiag_sum += 2 * abs(G.coeff(e));
  const mpz_class b0_sum = abs(G.coeff(0)) + offdiag_sum;

  // Widest strip |Im t| <= y0 on which Re g(t + i y0) > 0 can be certified on
  // the boundary circle; by the harmonic minimum principle Re g > 0 (hence
  // g != 0 and log g is analytic) throughout the strip. The boundary value is
  // the cosine series with cosh-amplified coefficients:
  //   Re g(t + i y0) = G_0 + sum_j 2 G_j cosh(2 pi j y0) cos(2 pi j t),
  // and conjugate symmetry covers the lower edge.
  const long pb = 96;
  double y0_d = 0.0, m_lo = 0.0;
  for (double c : {1.0, 0.5, 0.25, 0.125, 0.0625, 0.0}) {
    double y_try = c / static_cast<double>(D);
    if (c == 0.0) {
      // last rung: strip from the coefficient deviation bound
      double m_line = 0.0;
      CertifiedReal g0 = CertifiedReal::from_mpz(G.coeff(0), pb);
      std::vector<CertifiedReal> w(static_cast<size_t>(D) + 1, CertifiedReal(pb));
      for (long j = 1; j <= D; ++j)
        w[static_cast<size_t>(j)] = CertifiedReal::from_mpz(2 * G.coeff(j), pb);
      if (!cos_series_min_lower(g0, w, m_line))
        throw ToleranceNotMet("cannot certify |p| > 0 on the unit circle");
      // sum_{j != 0} |G_j| (e^{2 pi D y} - 1) <= m_line / 2 keeps Re g > 0
      y0_d = std::log1p(m_line / (2.0 * offdiag_sum.get_d())) /
             (2.0 * M_PI * static_cast<double>(D)) * 0.5;
      m_lo = m_line / 2.0;
      break;
    }
    const CertifiedReal y0b = CertifiedReal::from_double(y_try, pb);
    const CertifiedReal two_pi_b = CertifiedReal::pi(pb).mul_2si(1);
    CertifiedReal g0 = CertifiedReal::from_mpz(G.coeff(0), pb);
    std::vector<CertifiedReal> w(static_cast<size_t>(D) + 1, CertifiedReal(pb));
    for (long j = 1; j <= D; ++j) {
      const CertifiedReal arg = two_pi_b * CertifiedReal::from_long(j, pb) * y0b;
      const CertifiedReal ch = (arg.exp() + (-arg).exp()).mul_2si(-1);
      w[static_cast<size_t>(j)] = CertifiedReal::from_mpz(2 * G.coeff(j), pb) * ch;
    }
    double m_try = 0.0;
    if (cos_series_min_lower(g0, w, m_try)) {
      y0_d = y_try;
      m_lo = m_try;
      break;
    }
  }
  if (!(y0_d > 0.0) || !(m_lo > 0.0))
    throw ToleranceNotMet("cannot certify a zero-free strip around the circle");

  for (int round = 0; round < 6; ++round, pw *= 2) {
    const CertifiedReal two_pi = CertifiedReal::pi(pw).mul_2si(1);
    const CertifiedReal mB = CertifiedReal::from_double(m_lo, pw);
    const CertifiedReal B0 = CertifiedReal::from_mpz(b0_sum, pw);
    // any y0' <= the certified strip half-width is valid in the bound
    const CertifiedReal y0 = CertifiedReal::from_double(y0_d * (1.0 - 1e-9), pw);
    // On the strip, m_lo <= Re g <= |g| <= B0 e^{2 pi D y0}: f = log(g)/2 is
    // analytic, 1-periodic, and bounded by Bf.
    const CertifiedReal m_up =
        B0.log() + two_pi * CertifiedReal::from_long(D, pw) * y0;
    const CertifiedReal bf =
        (mB.log().abs() + m_up.abs()).mul_2si(-1) + CertifiedReal::from_long(2, pw);

    // Periodic trapezoid error <= 4 Bf e^(-2 pi y0 N) / (1 - e^-..) <= tol/4.
    long N = 64;
    CertifiedReal err(pw);
    while (true) {
      err = (-(two_pi * y0 * CertifiedReal::from_long(N, pw))).exp() * bf *
            CertifiedReal::from_long(8, pw);
      if (err.upper_double() < tolerance / 4) break;
      N *= 2;
      if (N > (1L << 26))
        throw ToleranceNotMet("quadrature grid exceeded 2^26 points");
    }

    // cos(2 pi k / N) table; cos is even and 1-periodic, so k <= N/2 suffices.
    std::vector<CertifiedReal> tab;
    tab.reserve(static_cast<size_t>(N / 2) + 1);
    for (long k = 0; k <= N / 2; ++k) {
      const CertifiedReal arg = two_pi * CertifiedReal::from_long(k, pw) /
                                CertifiedReal::from_long(N, pw);
      tab.push_back(arg.cos());
    }
    std::vector<CertifiedReal> twice_coeff;
    twice_coeff.reserve(static_cast<size_t>(D) + 1);
    for (long j = 0; j <= D; ++j)
      twice_coeff.push_back(CertifiedReal::from_mpz(2 * G.coeff(j), pw));
    const CertifiedReal g0 = CertifiedReal::from_mpz(G.coeff(0), pw);

    bool positive = true;
    CertifiedReal sum(pw);
    for (long i = 0; i < N && positive; ++i) {
      CertifiedReal g = g0;
      for (long j = 1; j <= D; ++j) {
        if (G.coeff(j) == 0) continue;
        long k = (j * i) % N;
        if (k > N / 2) k = N - k;
        g = g + twice_coeff[static_cast<size_t>(j)] * tab[static_cast<size_t>(k)];
      }
      if (!g.certainly_positive()) { positive = false; break; }
      sum = sum + g.log();
    }
    if (!positive) continue;  // retry at doubled working precision

    CertifiedReal mean = sum.mul_2si(-1) / CertifiedReal::from_long(N, pw);
    Mpfr errup = err.upper();
    mean = mean.inflate(errup);
    const CertifiedReal measure = mean.exp();
    if (measure.rad_double() <= tolerance) return measure;
  }
  throw ToleranceNotMet("quadrature failed to reach the requested tolerance");
}

CertifiedReal asymptotic_constant(const BicirculantSpec& spec, long prec) {
  const SymmetricPolyPack pack = build_pack(spec);
  const GammaClass cls = classify(spec);
  const IntLaurentPoly target =
      (cls == GammaClass::G1) ? pack.p1 : pack.shifted(cls) * pack.p1;
  return mahler_roots(target, prec);
}

std::vector<ConvergencePoint> convergence_report(const BicirculantSpec& family,
                                                 const std::vector<long>& ns,
                                                 long prec) {
  const GammaClass cls = classify(family);
  const CertifiedReal constant = asymptotic_constant(family, prec);
  std::vector<ConvergencePoint> out;
  out.reserve(ns.size());
  for (long n : ns) {
    const BicirculantSpec sp = with_order(family, n);
    const ForestCount f = forest_count_formula(sp);
    const unsigned long e =
        (cls == GammaClass::G1) ? static_cast<unsigned long>(n)
                                : static_cast<unsigned long>(n / 2);
    const CertifiedReal ratio =
        CertifiedReal::from_mpz(f.value, prec) / constant.pow_ui(e);
    out.push_back(ConvergencePoint{n, f.value, ratio});
  }
  return out;
}

}  // namespace bicirc
