#include "bicirc/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "bicirc/dense_poly.hpp"

namespace bicirc {

namespace {
const mpz_class kZero = 0;
}

IntLaurentPoly IntLaurentPoly::constant(mpz_class c) {
  IntLaurentPoly p;
  if (c != 0) {
    p.lo_ = 0;
    p.c_.push_back(std::move(c));
  }
  return p;
}

IntLaurentPoly IntLaurentPoly::monomial(mpz_class c, long e) {
  IntLaurentPoly p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(std::move(c));
  }
  return p;
}

IntLaurentPoly IntLaurentPoly::from_coeffs(long lo, std::vector<mpz_class> coeffs) {
  IntLaurentPoly p;
  size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0) ++first;
  size_t last = coeffs.size();
  while (last > first && coeffs[last - 1] == 0) --last;
  if (first == last) return p;
  p.lo_ = lo + static_cast<long>(first);
  p.c_.assign(coeffs.begin() + first, coeffs.begin() + last);
  return p;
}

const mpz_class& IntLaurentPoly::coeff(long e) const {
  if (is_zero() || e < lo_ || e > hi()) return kZero;
  return c_[static_cast<size_t>(e - lo_)];
}

bool IntLaurentPoly::palindromic() const { return *this == reversed(); }

long IntLaurentPoly::symmetric_degree() const {
  if (is_zero()) return 0;
  assert(palindromic());
  return hi();
}

IntLaurentPoly IntLaurentPoly::reversed() const {
  IntLaurentPoly p;
  if (is_zero()) return p;
  p.lo_ = -hi();
  p.c_.assign(c_.rbegin(), c_.rend());
  return p;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
  IntLaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

IntLaurentPoly operator+(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.lo_, b.lo_);
  const long hi = std::max(a.hi(), b.hi());
  std::vector<mpz_class> c(static_cast<size_t>(hi - lo + 1));
  for (long e = a.lo_; e <= a.hi(); ++e) c[static_cast<size_t>(e - lo)] += a.coeff(e);
  for (long e = b.lo_; e <= b.hi(); ++e) c[static_cast<size_t>(e - lo)] += b.coeff(e);
  return IntLaurentPoly::from_coeffs(lo, std::move(c));
}

IntLaurentPoly operator-(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  return a + (-b);
}

IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntLaurentPoly::from_coeffs(a.lo_ + b.lo_, std::move(c));
}

mpq_class IntLaurentPoly::eval(const mpq_class& z) const {
  if (is_zero()) return 0;
  // Horner on the shifted polynomial, then multiply by z^lo.
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + mpq_class(c_[i]);
  mpq_class zp = 1;
  if (lo_ >= 0) {
    for (long i = 0; i < lo_; ++i) zp *= z;
  } else {
    assert(z != 0);
    for (long i = 0; i < -lo_; ++i) zp *= z;
    zp = 1 / zp;
  }
  return acc * zp;
}

std::complex<double> IntLaurentPoly::eval(const std::complex<double>& z) const {
  if (is_zero()) return 0.0;
  std::complex<double> acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].get_d();
  return acc * std::pow(z, static_cast<double>(lo_));
}

std::string IntLaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long e = lo_; e <= hi(); ++e) {
    const mpz_class& c = coeff(e);
    if (c == 0) continue;
    if (!first) out << " + ";
    out << c.get_str() << "*z^" << e;
    first = false;
  }
  return out.str();
}

AbcPolys build_abc(const BicirculantSpec& spec) {
  AbcPolys out;
  const long s = spec.s();
  out.A = IntLaurentPoly::constant(2 * spec.r() + s + 1);
  for (long a : spec.alphas) {
    out.A = out.A - IntLaurentPoly::monomial(1, a);
    out.A = out.A - IntLaurentPoly::monomial(1, -a);
  }
  out.B = IntLaurentPoly::constant(2 * spec.t() + s + 1);
  for (long b : spec.betas) {
    out.B = out.B - IntLaurentPoly::monomial(1, b);
    out.B = out.B - IntLaurentPoly::monomial(1, -b);
  }
  out.C = IntLaurentPoly();
  for (long g : spec.gammas) out.C = out.C - IntLaurentPoly::monomial(1, g);
  return out;
}

const IntLaurentPoly& SymmetricPolyPack::shifted(GammaClass c) const {
  switch (c) {
    case GammaClass::G2: return p2;
    case GammaClass::G3: return p3;
    case GammaClass::G4: return p4;
    case GammaClass::G1: break;
  }
  return p1;
}

SymmetricPolyPack build_pack(const BicirculantSpec& spec) {
  SymmetricPolyPack pack;
  AbcPolys abc = build_abc(spec);
  pack.A = abc.A;
  pack.B = abc.B;
  pack.C = abc.C;
  const IntLaurentPoly cc = abc.C.reversed() * abc.C;
  const IntLaurentPoly two = IntLaurentPoly::constant(2);
  pack.p1 = abc.A * abc.B - cc;
  pack.p2 = (abc.A + two) * abc.B - cc;
  pack.p3 = abc.A * (abc.B + two) - cc;
  pack.p4 = (abc.A + two) * (abc.B + two) - cc;
  pack.k = 0;
  for (const IntLaurentPoly* p : {&pack.p1, &pack.p2, &pack.p3, &pack.p4}) {
    assert(p->palindromic());
    if (!p->is_zero()) pack.k = std::max(pack.k, p->symmetric_degree());
  }
  return pack;
}

ChebTransform cheb_transform(const IntLaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Chebyshev transform of the zero polynomial");
  if (!p.palindromic())
    throw NotPalindromic("Chebyshev transform requires P(z) == P(1/z): " + p.to_string());
  const long k = p.symmetric_degree();
  // U = eta_0 + sum_j 2 eta_j T_j(w), accumulated in the monomial basis with
  // the T recurrence T_{j+1} = 2 w T_j - T_{j-1}.
  std::vector<mpz_class> u(static_cast<size_t>(k) + 1);
  std::vector<mpz_class> tprev{1};        // T_0
  std::vector<mpz_class> tcur{0, 1};      // T_1
  u[0] = p.coeff(0);
  for (long j = 1; j <= k; ++j) {
    const mpz_class eta = p.coeff(j);
    if (eta != 0)
      for (size_t i = 0; i < tcur.size(); ++i) u[i] += 2 * eta * tcur[i];
    if (j < k) {
      std::vector<mpz_class> tnext(tcur.size() + 1);
      for (size_t i = 0; i < tcur.size(); ++i) tnext[i + 1] = 2 * tcur[i];
      for (size_t i = 0; i < tprev.size(); ++i) tnext[i] -= tprev[i];
      tprev = std::move(tcur);
      tcur = std::move(tnext);
    }
  }
  ChebTransform out;
  out.u = std::move(u);
  poly::trim(out.u);
  return out;
}

mpz_class cyclotomic_product(const IntLaurentPoly& p, long n) {
  if (p.is_zero()) throw ZeroPolynomial("cyclotomic product of the zero polynomial");
  assert(n >= 1);
  if (p.is_constant()) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.coeff(p.lo()).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  // prod_j p(eps^j) = prod_j eps^{j lo} * prod_j q(eps^j) with q = z^-lo p;
  // z^n - 1 is monic, so the second factor is Res(z^n - 1, q), and the first
  // is (-1)^{lo (n-1)} since the n-th roots of unity multiply to (-1)^{n-1}.
  mpz_class res = poly::resultant(poly::xn_minus_1(n), p.shifted_coeffs());
  if ((p.lo() % 2 != 0) && ((n - 1) % 2 != 0)) res = -res;
  return res;
}

ForestCount forest_count_formula(const BicirculantSpec& spec) {
  const SymmetricPolyPack pack = build_pack(spec);
  const GammaClass cls = classify(spec);
  const long n = spec.n;
  mpz_class f;
  if (cls == GammaClass::G1) {
    f = cyclotomic_product(pack.p1, n);
  } else {
    if (n % 2 != 0)
      throw OddOrderForHalfClass("half flag set but n = " + std::to_string(n) +
                                 " is odd");
    const IntLaurentPoly& ps = pack.shifted(cls);
    const mpz_class num = cyclotomic_product(ps, n) * cyclotomic_product(pack.p1, n / 2);
    const mpz_class den = cyclotomic_product(ps, n / 2);
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
      throw NonDivisible("cyclotomic product quotient is not exact for " +
                         std::string(to_string(cls)) + " at n = " + std::to_string(n));
    f = q;
  }
  f = abs(f);
  if (f < 1)
    throw Error("assembled count " + f.get_str() + " is below 1 at n = " +
                std::to_string(n) + "; I + L is positive definite, so this is a bug");
  return ForestCount{f};
}

}  // namespace bicirc
