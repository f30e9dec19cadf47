#pragma once

#include <gmpxx.h>

#include <vector>

#include "bicirc/exact_linear.hpp"
#include "bicirc/graph_core.hpp"

namespace bicirc {

// Odd/even counts of the generator lists: k1/k2 over alphas, m1/m2 over
// betas, h1/h2 over gammas.
struct ParityProfile {
  long k1 = 0, k2 = 0;
  long m1 = 0, m2 = 0;
  long h1 = 0, h2 = 0;
  long r = 0, t = 0, s = 0;
};

ParityProfile parity_profile(const BicirculantSpec& spec);

// The two square-free constants governing the count's square structure:
// f = q * a(n)^2 on the odd parity branch and f = l * b(n)^2 on the even one.
struct SquareStructure {
  mpz_class q;
  mpz_class l;

  bool operator==(const SquareStructure&) const = default;
};

// The square-free v with m = v * r^2. Throws NonPositive.
mpz_class square_free_part(const mpz_class& m);

// Class constants before/after square-free reduction:
//   q1 = sf(2s+1)
//   q2 = sf((2s+1)((4k1+s+3)(4m1+s+1)-(h2-h1)^2))
//   q3 = sf((2s+1)((4k1+s+1)(4m1+s+3)-(h2-h1)^2))
//   q4 = sf((2s+1)((4k1+s+3)(4m1+s+3)-(h2-h1)^2))
//   l  = sf((2s+1)((4k1+s+1)(4m1+s+1)-(h2-h1)^2))   (all classes)
// The inner products satisfy (4k1+s+1)(4m1+s+1) >= (s+1)^2 > s^2 >=
// (h2-h1)^2, so they are positive; NegativeConstant signals a violation.
SquareStructure square_structure_constants(const BicirculantSpec& spec);

struct SquareWitness {
  mpz_class constant;
  mpz_class root;  // reported non-negative
};

// Checks f = constant * root^2 with the parity-selected constant (parity of
// n for G1, of n/2 for G2-G4). Throws NotDivisible / NotAPerfectSquare --
// either would falsify the square structure and must surface loudly.
SquareWitness verify_square_structure(const BicirculantSpec& spec,
                                      const ForestCount& f);

struct SequenceRow {
  long n = 0;
  mpz_class f;
  mpz_class constant;
  mpz_class root;
};

// One row per order in [n_from, n_to] at which the generator pattern is
// valid; counts come from the exact formula route.
std::vector<SequenceRow> sequence_table(const BicirculantSpec& family,
                                        long n_from, long n_to);

}  // namespace bicirc
