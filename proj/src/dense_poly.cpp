#include "bicirc/dense_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bicirc::poly {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

const mpz_class& lead(const ZPoly& p) {
  assert(!p.empty());
  return p.back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly scalar_mul(const mpz_class& c, const ZPoly& a) {
  if (c == 0) return {};
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mpz_class(i) * a[i];
  trim(r);
  return r;
}

ZPoly xn_minus_1(long n) {
  assert(n >= 1);
  ZPoly r(static_cast<size_t>(n) + 1);
  r[0] = -1;
  r.back() = 1;
  return r;
}

mpz_class eval(const ZPoly& a, const mpz_class& x) {
  mpz_class r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return {};
  mpz_class c = content(a);
  if (lead(a) < 0) c = -c;
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  assert(!b.empty());
  const long db = degree(b);
  ZPoly r = a;
  long e = degree(a) - db + 1;
  const mpz_class& d = lead(b);
  while (!r.empty() && degree(r) >= db) {
    const mpz_class top = lead(r);
    const long shift = degree(r) - db;
    // r <- d*r - top * x^shift * b; the top coefficient cancels.
    for (auto& c : r) c *= d;
    for (long i = 0; i <= db; ++i) r[static_cast<size_t>(shift + i)] -= top * b[static_cast<size_t>(i)];
    trim(r);
    --e;
  }
  if (e > 0) {
    mpz_class dp;
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= dp;
  }
  return r;
}

namespace {

mpz_class pow_z(const mpz_class& b, long e) {
  assert(e >= 0);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

mpz_class resultant(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.empty() || b_in.empty())
    throw std::invalid_argument("resultant of the zero polynomial");
  ZPoly A = a_in, B = b_in;
  int s = 1;
  if (degree(A) < degree(B)) {
    std::swap(A, B);
    if ((degree(A) & 1) && (degree(B) & 1)) s = -s;
  }
  const mpz_class ca = content(A), cb = content(B);
  mpz_class t = pow_z(ca, degree(B)) * pow_z(cb, degree(A));
  {
    ZPoly Ap(A.size()), Bp(B.size());
    for (size_t i = 0; i < A.size(); ++i)
      mpz_divexact(Ap[i].get_mpz_t(), A[i].get_mpz_t(), ca.get_mpz_t());
    for (size_t i = 0; i < B.size(); ++i)
      mpz_divexact(Bp[i].get_mpz_t(), B[i].get_mpz_t(), cb.get_mpz_t());
    A = std::move(Ap);
    B = std::move(Bp);
  }
  if (degree(A) == 0) return t;  // both constants

  mpz_class g = 1, h = 1;
  while (degree(B) > 0) {
    const long delta = degree(A) - degree(B);
    if ((degree(A) & 1) && (degree(B) & 1)) s = -s;
    ZPoly R = pseudo_rem(A, B);
    A = std::move(B);
    // B <- R / (g * h^delta), exact by the subresultant theory.
    const mpz_class den = g * pow_z(h, delta);
    B.assign(R.size(), 0);
    for (size_t i = 0; i < R.size(); ++i)
      mpz_divexact(B[i].get_mpz_t(), R[i].get_mpz_t(), den.get_mpz_t());
    g = lead(A);
    if (delta > 0) {
      const mpz_class gh = pow_z(g, delta);
      if (delta == 1)
        h = gh;
      else
        mpz_divexact(h.get_mpz_t(), gh.get_mpz_t(), pow_z(h, delta - 1).get_mpz_t());
    }
    if (B.empty()) return 0;  // nontrivial common factor
  }
  // deg B == 0, deg A >= 1
  const long dA = degree(A);
  mpz_class num = pow_z(lead(B), dA);
  mpz_class res;
  if (dA == 1)
    res = num;
  else
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), pow_z(h, dA - 1).get_mpz_t());
  return s * t * res;
}

namespace {

// Rational dense polynomial helpers for Yun's algorithm. Degrees here are
// tiny (Chebyshev transforms of the corpus polynomials), so plain Euclid in
// Q[x] with monic normalization is fine.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_from_z(const ZPoly& a) {
  QPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

QPoly q_derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mpq_class(static_cast<long>(i)) * a[i];
  qtrim(r);
  return r;
}

void q_make_monic(QPoly& a) {
  if (a.empty()) return;
  const mpq_class inv = 1 / a.back();
  for (auto& c : a) c *= inv;
}

// a mod b, b monic or not (exact rational arithmetic).
QPoly q_rem(QPoly a, const QPoly& b) {
  const long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const long shift = static_cast<long>(a.size()) - 1 - db;
    for (long i = 0; i <= db; ++i) a[static_cast<size_t>(shift + i)] -= f * b[static_cast<size_t>(i)];
    qtrim(a);
  }
  return a;
}

// Exact quotient a / b; remainder must vanish.
QPoly q_divexact(QPoly a, const QPoly& b) {
  const long db = static_cast<long>(b.size()) - 1;
  assert(db >= 0);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const long shift = static_cast<long>(a.size()) - 1 - db;
    q[static_cast<size_t>(shift)] = f;
    for (long i = 0; i <= db; ++i) a[static_cast<size_t>(shift + i)] -= f * b[static_cast<size_t>(i)];
    qtrim(a);
  }
  assert(a.empty());
  qtrim(q);
  return q;
}

QPoly q_gcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = q_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) q_make_monic(b);
  }
  if (a.empty()) return a;
  q_make_monic(a);
  return a;
}

ZPoly z_from_q_primitive(const QPoly& a) {
  // Clear denominators, then take the primitive part.
  mpz_class den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    mpq_class scaled = a[i] * den;
    assert(scaled.get_den() == 1);
    r[i] = scaled.get_num();
  }
  return primitive_part(r);
}

}  // namespace

std::vector<std::pair<ZPoly, int>> squarefree_decompose(const ZPoly& a) {
  assert(degree(a) >= 1);
  std::vector<std::pair<ZPoly, int>> out;
  QPoly f = q_from_z(a);
  QPoly fp = q_derivative(f);
  QPoly g = q_gcd(f, fp);
  if (g.size() <= 1) {
    out.emplace_back(primitive_part(a), 1);
    return out;
  }
  QPoly b = q_divexact(f, g);
  QPoly c = q_divexact(fp, g);
  QPoly d = c;
  {
    QPoly bp = q_derivative(b);
    d.resize(std::max(d.size(), bp.size()), 0);
    for (size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    qtrim(d);
  }
  int i = 1;
  while (b.size() > 1) {
    QPoly fac = q_gcd(b, d);
    if (fac.size() > 1) out.emplace_back(z_from_q_primitive(fac), i);
    b = q_divexact(b, fac);
    QPoly cc = q_divexact(d, fac);
    QPoly bp = q_derivative(b);
    d = cc;
    d.resize(std::max(d.size(), bp.size()), 0);
    for (size_t j = 0; j < bp.size(); ++j) d[j] -= bp[j];
    qtrim(d);
    ++i;
  }
  return out;
}

}  // namespace bicirc::poly
