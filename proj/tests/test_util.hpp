#pragma once

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bicirc/graph_core.hpp"

namespace bicirc::testutil {

// Deterministic random valid spec with n <= max_n, |alphas|,|betas| <= 3,
// |gammas| <= 3, all half-flag combinations reachable on even n.
inline BicirculantSpec random_spec(std::mt19937& rng, long max_n = 10) {
  std::uniform_int_distribution<long> npick(1, max_n);
  const long n = npick(rng);
  auto pick_inner = [&](bool& half) {
    std::vector<long> out;
    half = false;
    if (n % 2 == 0 && rng() % 2 == 0) half = true;
    const long top = (n - 1) / 2;  // strict alpha < n/2
    if (top >= 1) {
      std::uniform_int_distribution<long> cnt(0, 3);
      long want = std::min(cnt(rng), top);
      std::set<long> chosen;
      std::uniform_int_distribution<long> pick(1, top);
      while (static_cast<long>(chosen.size()) < want) chosen.insert(pick(rng));
      out.assign(chosen.begin(), chosen.end());
    }
    return out;
  };
  bool half_r = false, half_t = false;
  const std::vector<long> alphas = pick_inner(half_r);
  const std::vector<long> betas = pick_inner(half_t);
  std::vector<long> R, T, S;
  for (long a : alphas) {
    R.push_back(a);
    if (a != (n - a) % n) R.push_back(n - a);
  }
  if (half_r) R.push_back(n / 2);
  for (long b : betas) {
    T.push_back(b);
    if (b != (n - b) % n) T.push_back(n - b);
  }
  if (half_t) T.push_back(n / 2);
  {
    std::uniform_int_distribution<long> cnt(0, 3);
    long want = std::min(cnt(rng), n);
    std::set<long> chosen;
    std::uniform_int_distribution<long> pick(0, n - 1);
    while (static_cast<long>(chosen.size()) < want) chosen.insert(pick(rng));
    S.assign(chosen.begin(), chosen.end());
  }
  return parse_spec(n, R, T, S);
}

// Relabels by a unit multiplier coprime to n; graph isomorphism.
inline BicirculantSpec relabel(const BicirculantSpec& spec, long u) {
  const long n = spec.n;
  auto map_set = [&](const std::vector<long>& xs) {
    std::vector<long> out;
    for (long x : xs) out.push_back(((x * u) % n + n) % n);
    return out;
  };
  return parse_spec(n, map_set(spec.full_R()), map_set(spec.full_T()),
                    map_set(spec.full_S()));
}

inline long random_unit(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> pick(1, n);
  while (true) {
    const long u = pick(rng);
    if (std::gcd(u, n) == 1) return u;
  }
}

}  // namespace bicirc::testutil
