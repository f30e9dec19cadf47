#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bicirc/dense_poly.hpp"
#include "bicirc/exact_linear.hpp"

using namespace bicirc;
using poly::ZPoly;

namespace {

// prod_j q(eps_n^j) via the circulant generator: det of q(Q).
mpz_class companion_product(const ZPoly& q, long n) {
  BigMatrix m(n, n);
  for (size_t e = 0; e < q.size(); ++e) {
    const long shift = static_cast<long>(e) % n;
    for (long i = 0; i < n; ++i) m(i, (i + shift) % n) += q[e];
  }
  return det_exact(m);
}

ZPoly random_poly(std::mt19937& rng, long max_deg, long max_coeff) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  ZPoly p(static_cast<size_t>(deg(rng)) + 1);
  for (auto& c : p) c = coeff(rng);
  poly::trim(p);
  return p;
}

}  // namespace

TEST_CASE("resultant on fixed small cases") {
  // Res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
  const ZPoly a{-1, 0, 1};
  const ZPoly b{-2, 1};
  CHECK(poly::resultant(a, b) == 3);
  CHECK(poly::resultant(b, a) == 3);  // (-1)^(2*1) = 1

  // Res(x - 1, x - 3) = (x - 3) at 1 = -2; swapping flips by (-1)^(1*1)
  CHECK(poly::resultant(ZPoly{-1, 1}, ZPoly{-3, 1}) == -2);
  CHECK(poly::resultant(ZPoly{-3, 1}, ZPoly{-1, 1}) == 2);

  // constant second argument: Res(x^n - 1, c) = c^n
  CHECK(poly::resultant(poly::xn_minus_1(4), ZPoly{5}) == 625);
  CHECK(poly::resultant(poly::xn_minus_1(3), ZPoly{-2}) == -8);

  // shared root gives 0
  CHECK(poly::resultant(ZPoly{-1, 0, 1}, ZPoly{-1, 1}) == 0);

  // both constants
  CHECK(poly::resultant(ZPoly{7}, ZPoly{4}) == 1);
}

TEST_CASE("resultant with x^n - 1 equals the circulant determinant") {
  std::mt19937 rng(101);
  for (int iter = 0; iter < 250; ++iter) {
    std::uniform_int_distribution<long> npick(1, 6);
    const long n = npick(rng);
    ZPoly q = random_poly(rng, 4, 5);
    if (q.empty()) continue;
    CHECK(poly::resultant(poly::xn_minus_1(n), q) == companion_product(q, n));
  }
}

TEST_CASE("content and primitive part") {
  const ZPoly p{6, -9, 12};
  CHECK(poly::content(p) == 3);
  CHECK(poly::primitive_part(p) == ZPoly{2, -3, 4});
  const ZPoly neg{-4, -8};
  CHECK(poly::primitive_part(neg) == ZPoly{1, 2});  // positive leading coeff
}

TEST_CASE("squarefree decomposition on fixed cases") {
  // (x - 1)^2 (x + 2)
  const ZPoly f = poly::mul(poly::mul(ZPoly{-1, 1}, ZPoly{-1, 1}), ZPoly{2, 1});
  const auto parts = poly::squarefree_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == ZPoly{2, 1});
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == ZPoly{-1, 1});
  CHECK(parts[1].second == 2);

  // already squarefree
  const auto one = poly::squarefree_decompose(ZPoly{1, 0, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == ZPoly{1, 0, 1});
  CHECK(one[0].second == 1);

  // (x^2 - 2)^3
  ZPoly c{-2, 0, 1};
  ZPoly f3 = poly::mul(poly::mul(c, c), c);
  const auto cube = poly::squarefree_decompose(f3);
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].first == c);
  CHECK(cube[0].second == 3);
}

TEST_CASE("squarefree decomposition reconstructs the primitive part") {
  std::mt19937 rng(55);
  for (int iter = 0; iter < 120; ++iter) {
    ZPoly f = random_poly(rng, 3, 4);
    ZPoly g = random_poly(rng, 2, 3);
    if (poly::degree(f) < 1 || poly::degree(g) < 1) continue;
    // f * g^2 has forced multiplicity structure
    const ZPoly prod = poly::mul(f, poly::mul(g, g));
    if (poly::degree(prod) < 1) continue;
    const auto parts = poly::squarefree_decompose(prod);
    ZPoly rebuilt{1};
    for (const auto& [fac, mult] : parts)
      for (int i = 0; i < mult; ++i) rebuilt = poly::mul(rebuilt, fac);
    CHECK(rebuilt == poly::primitive_part(prod));
  }
}

TEST_CASE("eval and derivative") {
  const ZPoly p{1, -3, 0, 2};  // 2x^3 - 3x + 1
  CHECK(poly::eval(p, 2) == 11);
  CHECK(poly::derivative(p) == ZPoly{-3, 0, 6});
  CHECK(poly::derivative(ZPoly{42}).empty());
}
