#pragma once

#include <gmpxx.h>

#include "bicirc/graph_core.hpp"

namespace bicirc {

// Number of rooted spanning forests of a graph; always >= 1 (the
// all-singletons forest exists for any vertex set).
struct ForestCount {
  mpz_class value;

  bool operator==(const ForestCount&) const = default;
};

// Exact determinant by fraction-free (Bareiss) elimination. No rounding
// anywhere; intermediate quotients are exact by construction.
// Throws NotSquare.
mpz_class det_exact(const BigMatrix& m);

// Brute-force route: det(I_{2n} + L(Gamma)). Intended for 2n <= ~200;
// beyond that the closed-formula routes are authoritative.
ForestCount forest_count_oracle(const BicirculantSpec& spec);

}  // namespace bicirc
