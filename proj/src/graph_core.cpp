#include "bicirc/graph_core.hpp"

#include <algorithm>
#include <set>

namespace bicirc {

const char* to_string(GammaClass c) {
  switch (c) {
    case GammaClass::G1: return "G1";
    case GammaClass::G2: return "G2";
    case GammaClass::G3: return "G3";
    case GammaClass::G4: return "G4";
  }
  return "?";
}

namespace {

void check_elements(long n, const std::vector<long>& xs, const char* name) {
  std::set<long> seen;
  for (long x : xs) {
    if (x < 0 || x >= n)
      throw OutOfRange(std::string(name) + " element " + std::to_string(x) +
                       " not in [0, " + std::to_string(n - 1) + "]");
    if (!seen.insert(x).second)
      throw DuplicateElement(std::string(name) + " contains " + std::to_string(x) +
                             " twice");
  }
}

// Splits a symmetric inner connection set into {alpha_j} plus the n/2 flag.
void split_inner(long n, const std::vector<long>& xs, const char* name,
                 std::vector<long>& pairs, bool& half) {
  std::set<long> elems(xs.begin(), xs.end());
  for (long x : xs) {
    if (x == 0) throw ZeroInRT(std::string(name) + " contains 0");
    long neg = (n - x) % n;
    if (!elems.count(neg))
      throw NonSymmetricConnectionSet(std::string(name) + " misses -" +
                                      std::to_string(x) + " = " + std::to_string(neg) +
                                      " mod " + std::to_string(n));
    if (2 * x == n)
      half = true;
    else if (x < neg)
      pairs.push_back(x);
  }
  std::sort(pairs.begin(), pairs.end());
}

}  // namespace

BicirculantSpec parse_spec(long n, const std::vector<long>& R,
                           const std::vector<long>& T,
                           const std::vector<long>& S) {
  if (n < 1) throw OutOfRange("group order must be positive, got " + std::to_string(n));
  check_elements(n, R, "R");
  check_elements(n, T, "T");
  check_elements(n, S, "S");

  BicirculantSpec spec;
  spec.n = n;
  split_inner(n, R, "R", spec.alphas, spec.half_in_R);
  split_inner(n, T, "T", spec.betas, spec.half_in_T);
  spec.gammas = S;
  std::sort(spec.gammas.begin(), spec.gammas.end());
  return spec;
}

GammaClass classify(const BicirculantSpec& spec) {
  if (spec.half_in_R && spec.half_in_T) return GammaClass::G4;
  if (spec.half_in_R) return GammaClass::G2;
  if (spec.half_in_T) return GammaClass::G3;
  return GammaClass::G1;
}

namespace {

std::vector<long> expand_inner(long n, const std::vector<long>& pairs, bool half) {
  std::vector<long> out;
  for (long a : pairs) {
    out.push_back(a);
    out.push_back(n - a);
  }
  if (half) out.push_back(n / 2);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<long> BicirculantSpec::full_R() const { return expand_inner(n, alphas, half_in_R); }
std::vector<long> BicirculantSpec::full_T() const { return expand_inner(n, betas, half_in_T); }
std::vector<long> BicirculantSpec::full_S() const { return gammas; }

BicirculantSpec with_order(const BicirculantSpec& spec, long m) {
  if (m < 1) throw OutOfRange("group order must be positive, got " + std::to_string(m));
  if ((spec.half_in_R || spec.half_in_T) && m % 2 != 0)
    throw OddOrderForHalfClass("pattern uses n/2 but order " + std::to_string(m) +
                               " is odd");
  std::vector<long> R = expand_inner(m, spec.alphas, spec.half_in_R);
  std::vector<long> T = expand_inner(m, spec.betas, spec.half_in_T);
  // expand_inner does not re-validate alpha < m/2; parse_spec does.
  for (long a : spec.alphas)
    if (a >= m || 2 * a >= m)
      throw OutOfRange("alpha " + std::to_string(a) + " not below " +
                       std::to_string(m) + "/2");
  for (long b : spec.betas)
    if (b >= m || 2 * b >= m)
      throw OutOfRange("beta " + std::to_string(b) + " not below " +
                       std::to_string(m) + "/2");
  return parse_spec(m, R, T, spec.gammas);
}

BigMatrix adjacency_matrix(const BicirculantSpec& spec) {
  const long n = spec.n;
  BigMatrix m(2 * n, 2 * n);
  for (long x : spec.full_R())
    for (long i = 0; i < n; ++i) m(i, (i + x) % n) += 1;
  for (long y : spec.full_T())
    for (long i = 0; i < n; ++i) m(n + i, n + (i + y) % n) += 1;
  for (long u : spec.full_S())
    for (long i = 0; i < n; ++i) {
      m(i, n + (i + u) % n) += 1;
      m(n + (i + u) % n, i) += 1;
    }
  return m;
}

BigMatrix forest_matrix(const BicirculantSpec& spec) {
  BigMatrix m = adjacency_matrix(spec);
  const long N = m.rows;
  for (long i = 0; i < N; ++i) {
    mpz_class degree = 0;
    for (long j = 0; j < N; ++j) degree += m(i, j);
    for (long j = 0; j < N; ++j) m(i, j) = -m(i, j);
    m(i, i) = degree + 1;
  }
  return m;
}

}  // namespace bicirc
