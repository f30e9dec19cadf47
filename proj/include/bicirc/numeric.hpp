#pragma once

#include <gmpxx.h>

#include <vector>

#include "bicirc/certified.hpp"
#include "bicirc/laurent.hpp"

namespace bicirc {

struct CertifiedRoot {
  CertifiedComplex value;
  int multiplicity = 1;
};

// Certified root enclosures: each box contains exactly one distinct root,
// listed once with its multiplicity.
struct RootSet {
  std::vector<CertifiedRoot> roots;

  long total_multiplicity() const {
    long m = 0;
    for (const auto& r : roots) m += r.multiplicity;
    return m;
  }
};

// All complex roots of the integer polynomial with the given ascending
// coefficients (degree >= 0 after trimming). Multiplicities come from the
// exact square-free decomposition; each enclosure is certified to contain
// exactly one root of its factor and enclosures are pairwise disjoint.
// Throws PrecisionExhausted if certification fails within `prec` bits.
RootSet certified_roots(const std::vector<mpz_class>& coeffs, long prec);

// Roots of a Chebyshev transform; empty RootSet for constant U.
RootSet find_transform_roots(const ChebTransform& u, long prec);

// Certified T_n(w). Uses the z-form (solve z + 1/z = 2w, power by binary
// exponentiation) when the enclosure of w^2 - 1 clears the branch cut and
// |z| is bounded away from 1, otherwise the three-term recurrence.
CertifiedComplex cheb_T(unsigned long n, const CertifiedComplex& w);

// Evaluates the class-appropriate Chebyshev product with adaptive precision
// (128 bits doubling up to the ceiling) until the enclosure pins a unique
// integer. Agrees bit-exactly with forest_count_formula.
// Throws PrecisionExhausted beyond the ceiling.
ForestCount forest_count_chebyshev(const BicirculantSpec& spec,
                                   long precision_ceiling = 16384);

// Mahler measure |lead| * prod max(1, |root|) from certified root moduli.
// Throws RootOnUnitCircle if a modulus cannot be separated from 1 at `prec`.
CertifiedReal mahler_roots(const IntLaurentPoly& p, long prec);

// Mahler measure as exp of the mean of log|p| over the unit circle, by the
// periodic trapezoid rule with a rigorous analytic-strip error bound.
// The result radius is at most `tolerance`; throws ToleranceNotMet.
CertifiedReal mahler_integral(const IntLaurentPoly& p, double tolerance);

// Class constant: M(P1) for G1, M(Pj * P1) for Gj, j = 2, 3, 4.
CertifiedReal asymptotic_constant(const BicirculantSpec& spec, long prec);

struct ConvergencePoint {
  long n = 0;
  mpz_class count;
  CertifiedReal ratio;
};

// f(2n) / M^n (G1) or f(2n) / M^(n/2) (G2-G4) for each requested n, using
// exact counts and the certified constant. The spec acts as the generator
// pattern, re-instantiated at each n.
std::vector<ConvergencePoint> convergence_report(const BicirculantSpec& family,
                                                 const std::vector<long>& ns,
                                                 long prec = 256);

}  // namespace bicirc
