#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bicirc/errors.hpp"

namespace bicirc {

// Structural class of a bicirculant graph BC(Z_n; R, T, S), determined by
// whether the involution n/2 belongs to R, to T, to both, or to neither.
enum class GammaClass { G1, G2, G3, G4 };

const char* to_string(GammaClass c);

// Half-set form of BC(Z_n; R, T, S):
//   R = {+-alpha_1, ..., +-alpha_r} (+ {n/2} when half_in_R),
//   T = {+-beta_1, ..., +-beta_t}   (+ {n/2} when half_in_T),
//   S = {gamma_1, ..., gamma_s}.
// Vertices 0..n-1 are the right part (carrying R), n..2n-1 the left part
// (carrying T); spokes go from right to left along S.
struct BicirculantSpec {
  long n = 1;
  std::vector<long> alphas;  // strictly increasing, in (0, n/2)
  std::vector<long> betas;   // strictly increasing, in (0, n/2)
  std::vector<long> gammas;  // strictly increasing, in [0, n-1]
  bool half_in_R = false;
  bool half_in_T = false;

  long r() const { return static_cast<long>(alphas.size()); }
  long t() const { return static_cast<long>(betas.size()); }
  long s() const { return static_cast<long>(gammas.size()); }

  // Full connection sets as sorted residues mod n.
  std::vector<long> full_R() const;
  std::vector<long> full_T() const;
  std::vector<long> full_S() const;

  bool operator==(const BicirculantSpec&) const = default;
};

// Validates and normalizes (n, R, T, S) into half-set form.
// Throws NonSymmetricConnectionSet, ZeroInRT, DuplicateElement, OutOfRange.
BicirculantSpec parse_spec(long n, const std::vector<long>& R,
                           const std::vector<long>& T,
                           const std::vector<long>& S);

GammaClass classify(const BicirculantSpec& spec);

// Re-instantiates the same generator pattern at group order m: alphas, betas,
// gammas and half flags are kept, the paired elements n-alpha are rebuilt for
// the new order. Throws if the pattern is invalid at order m.
BicirculantSpec with_order(const BicirculantSpec& spec, long m);

// Dense matrix of arbitrary-precision integers, row-major.
struct BigMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<mpz_class> a;

  BigMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  mpz_class& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& operator()(long i, long j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  bool operator==(const BigMatrix&) const = default;
};

// 2n x 2n symmetric 0/1 adjacency matrix in the block layout
//   [ sum Q^x (x in R)   sum Q^u (u in S) ]
//   [ transpose          sum Q^y (y in T) ]
// with Q the cyclic shift circ(0,1,0,...,0).
BigMatrix adjacency_matrix(const BicirculantSpec& spec);

// I_{2n} + L(Gamma) = I + D - A; every row sums to exactly 1.
BigMatrix forest_matrix(const BicirculantSpec& spec);

}  // namespace bicirc
