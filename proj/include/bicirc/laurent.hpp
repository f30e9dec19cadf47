#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "bicirc/exact_linear.hpp"
#include "bicirc/graph_core.hpp"

namespace bicirc {

// Integer-coefficient Laurent polynomial sum c_e z^e, e = lo .. lo+len-1.
// The first and last stored coefficients are nonzero unless the polynomial
// is identically zero (empty coefficient vector).
class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;  // zero

  static IntLaurentPoly constant(mpz_class c);
  static IntLaurentPoly monomial(mpz_class c, long e);
  static IntLaurentPoly from_coeffs(long lo, std::vector<mpz_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  // Coefficient of z^e (0 outside the stored range).
  const mpz_class& coeff(long e) const;
  // Stored coefficients, ascending from lo().
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool palindromic() const;  // P(z) == P(1/z)
  // k with P = eta_0 + sum_{j=1..k} eta_j (z^j + z^-j); requires palindromic.
  long symmetric_degree() const;

  IntLaurentPoly reversed() const;  // z -> 1/z

  IntLaurentPoly operator-() const;
  friend IntLaurentPoly operator+(const IntLaurentPoly&, const IntLaurentPoly&);
  friend IntLaurentPoly operator-(const IntLaurentPoly&, const IntLaurentPoly&);
  friend IntLaurentPoly operator*(const IntLaurentPoly&, const IntLaurentPoly&);
  bool operator==(const IntLaurentPoly&) const = default;

  mpq_class eval(const mpq_class& z) const;  // exact; z != 0 unless lo() >= 0
  std::complex<double> eval(const std::complex<double>& z) const;

  // Coefficients of z^-lo * P, ascending; constant term nonzero.
  std::vector<mpz_class> shifted_coeffs() const { return c_; }

  // Canonical textual form "c*z^e + ..." with exponents ascending.
  std::string to_string() const;

 private:
  long lo_ = 0;
  std::vector<mpz_class> c_;
};

// The connection-set polynomials
//   A(z) = 2r+s+1 - sum_j (z^alpha_j + z^-alpha_j)
//   B(z) = 2t+s+1 - sum_j (z^beta_j  + z^-beta_j)
//   C(z) = -sum_j z^gamma_j
// Half flags are deliberately not consulted here; their contribution is the
// +2 shift selecting P2/P3/P4 downstream.
struct AbcPolys {
  IntLaurentPoly A, B, C;
};

AbcPolys build_abc(const BicirculantSpec& spec);

// P1 = A*B - C(1/z)*C(z), P2 = (A+2)*B - ..., P3 = A*(B+2) - ...,
// P4 = (A+2)*(B+2) - ...; all palindromic. k is the largest symmetric degree
// (the four agree except in degenerate leading-term cancellations).
struct SymmetricPolyPack {
  IntLaurentPoly A, B, C;
  IntLaurentPoly p1, p2, p3, p4;
  long k = 0;

  const IntLaurentPoly& shifted(GammaClass c) const;  // P2/P3/P4 by class
};

SymmetricPolyPack build_pack(const BicirculantSpec& spec);

// U(w) = eta_0 + sum_j 2 eta_j T_j(w) in the monomial basis of w, so that
// U((z + 1/z)/2) == P(z). Degree of U equals the symmetric degree of P and
// lead(U) = 2^k eta_k.
struct ChebTransform {
  std::vector<mpz_class> u;  // u[i] = coefficient of w^i, trimmed

  long degree() const { return static_cast<long>(u.size()) - 1; }
};

// Throws NotPalindromic (also for inputs where P(z) != P(1/z)) and
// ZeroPolynomial for the zero input.
ChebTransform cheb_transform(const IntLaurentPoly& p);

// Exact integer prod_{j=0}^{n-1} P(eps_n^j) over the n-th roots of unity,
// computed as a resultant with z^n - 1. Throws ZeroPolynomial.
mpz_class cyclotomic_product(const IntLaurentPoly& p, long n);

// Exact count of rooted spanning forests via cyclotomic products:
//   G1: Pi(P1, n)
//   G2: Pi(P2, n) * Pi(P1, n/2) / Pi(P2, n/2)   (exact division)
//   G3, G4: same with P3, P4.
// The absolute value is returned; a nonzero remainder in the division throws
// NonDivisible (it would indicate an implementation bug).
ForestCount forest_count_formula(const BicirculantSpec& spec);

}  // namespace bicirc
