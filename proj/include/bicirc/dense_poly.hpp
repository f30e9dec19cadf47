#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace bicirc::poly {

// Dense integer polynomial, coeffs[i] = coefficient of x^i, trimmed so the
// last entry is nonzero; the zero polynomial is the empty vector.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
long degree(const ZPoly& p);  // -1 for the zero polynomial
const mpz_class& lead(const ZPoly& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scalar_mul(const mpz_class& c, const ZPoly& a);
ZPoly derivative(const ZPoly& a);
ZPoly xn_minus_1(long n);

mpz_class eval(const ZPoly& a, const mpz_class& x);

// gcd of coefficients, >= 0; 0 for the zero polynomial.
mpz_class content(const ZPoly& a);
// a / content, sign-normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& a);

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b. Requires b != 0.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

// Resultant over Z via the subresultant polynomial remainder sequence.
// Res(a, b) = lead(a)^deg(b) * prod b(alpha) over the roots alpha of a.
// Both inputs must be nonzero.
mpz_class resultant(const ZPoly& a, const ZPoly& b);

// Square-free decomposition a = c * prod f_i^i with the f_i pairwise coprime,
// square-free, primitive with positive leading coefficient. Only factors of
// positive degree are returned. Requires deg a >= 1.
std::vector<std::pair<ZPoly, int>> squarefree_decompose(const ZPoly& a);

}  // namespace bicirc::poly
