#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bicirc/graph_core.hpp"
#include "test_util.hpp"

using namespace bicirc;

TEST_CASE("parse_spec normalizes the half-set form") {
  const BicirculantSpec s = parse_spec(3, {1, 2}, {}, {0});
  CHECK(s.n == 3);
  CHECK(s.alphas == std::vector<long>{1});
  CHECK(s.betas.empty());
  CHECK(s.gammas == std::vector<long>{0});
  CHECK_FALSE(s.half_in_R);
  CHECK_FALSE(s.half_in_T);
  CHECK(classify(s) == GammaClass::G1);
}

TEST_CASE("parse_spec detects the involution") {
  const BicirculantSpec s = parse_spec(4, {1, 2, 3}, {}, {0});
  CHECK(s.alphas == std::vector<long>{1});
  CHECK(s.half_in_R);
  CHECK(classify(s) == GammaClass::G2);

  const BicirculantSpec g3 = parse_spec(4, {1, 3}, {2}, {0});
  CHECK(classify(g3) == GammaClass::G3);
  const BicirculantSpec g4 = parse_spec(4, {1, 2, 3}, {2}, {0});
  CHECK(classify(g4) == GammaClass::G4);

  // half element alone leaves the pair list empty
  const BicirculantSpec h = parse_spec(6, {3}, {}, {});
  CHECK(h.half_in_R);
  CHECK(h.alphas.empty());
}

TEST_CASE("parse_spec rejects invalid input") {
  CHECK_THROWS_AS(parse_spec(3, {1}, {}, {0}), NonSymmetricConnectionSet);
  CHECK_THROWS_AS(parse_spec(3, {0}, {}, {}), ZeroInRT);
  CHECK_THROWS_AS(parse_spec(3, {}, {0}, {}), ZeroInRT);
  CHECK_THROWS_AS(parse_spec(5, {1, 1, 4}, {}, {}), DuplicateElement);
  CHECK_THROWS_AS(parse_spec(5, {}, {}, {2, 2}), DuplicateElement);
  CHECK_THROWS_AS(parse_spec(5, {5}, {}, {}), OutOfRange);
  CHECK_THROWS_AS(parse_spec(5, {}, {}, {-1}), OutOfRange);
  CHECK_THROWS_AS(parse_spec(0, {}, {}, {}), OutOfRange);
  // 1 == -1 mod 2 is the involution, not a pair
  const BicirculantSpec s2 = parse_spec(2, {1}, {}, {});
  CHECK(s2.half_in_R);
  CHECK(s2.alphas.empty());
}

TEST_CASE("classification is invariant under input reordering") {
  const BicirculantSpec a = parse_spec(7, {2, 5, 3, 4}, {}, {6, 0, 3});
  const BicirculantSpec b = parse_spec(7, {4, 3, 5, 2}, {}, {3, 6, 0});
  CHECK(a == b);
  CHECK(classify(a) == classify(b));
}

TEST_CASE("with_order re-instantiates the generator pattern") {
  const BicirculantSpec base = parse_spec(3, {1, 2}, {}, {0});
  const BicirculantSpec at5 = with_order(base, 5);
  CHECK(at5.full_R() == std::vector<long>{1, 4});
  CHECK_THROWS_AS(with_order(base, 2), Error);  // alpha = 1 not below 2/2

  const BicirculantSpec half = parse_spec(4, {2}, {}, {0});
  CHECK_THROWS_AS(with_order(half, 5), OddOrderForHalfClass);
  CHECK(with_order(half, 6).full_R() == std::vector<long>{3});
}

TEST_CASE("adjacency matrix of K2") {
  const BigMatrix m = adjacency_matrix(parse_spec(1, {}, {}, {0}));
  CHECK(m.rows == 2);
  CHECK(m(0, 0) == 0);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(1, 1) == 0);
}

TEST_CASE("adjacency matrix blocks: triangle, spokes, empty side") {
  const BigMatrix m = adjacency_matrix(parse_spec(3, {1, 2}, {}, {0}));
  CHECK(m.rows == 6);
  // right part (vertices 0..2) is a triangle
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) CHECK(m(i, j) == (i == j ? 0 : 1));
  // spokes i -- 3+i
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) CHECK(m(i, 3 + j) == (i == j ? 1 : 0));
  // left part has no inner edges
  for (long i = 3; i < 6; ++i)
    for (long j = 3; j < 6; ++j) CHECK(m(i, j) == 0);
}

TEST_CASE("adjacency is symmetric 0/1 with regular block degrees") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    const BicirculantSpec spec = testutil::random_spec(rng);
    const BigMatrix m = adjacency_matrix(spec);
    const long n = spec.n;
    const long want_top = static_cast<long>(spec.full_R().size() + spec.full_S().size());
    for (long i = 0; i < 2 * n; ++i) {
      CHECK(m(i, i) == 0);
      mpz_class row = 0;
      for (long j = 0; j < 2 * n; ++j) {
        CHECK(m(i, j) == m(j, i));
        CHECK((m(i, j) == 0 || m(i, j) == 1));
        row += m(i, j);
      }
      if (i < n) CHECK(row == want_top);
    }
  }
}

TEST_CASE("forest matrix of K2 and the triangle example") {
  const BigMatrix k2 = forest_matrix(parse_spec(1, {}, {}, {0}));
  CHECK(k2(0, 0) == 2);
  CHECK(k2(0, 1) == -1);
  CHECK(k2(1, 0) == -1);
  CHECK(k2(1, 1) == 2);

  const BigMatrix m = forest_matrix(parse_spec(3, {1, 2}, {}, {0}));
  for (long i = 0; i < 3; ++i) CHECK(m(i, i) == 4);
  for (long i = 3; i < 6; ++i) CHECK(m(i, i) == 2);
}

TEST_CASE("every forest-matrix row sums to exactly 1") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    const BigMatrix m = forest_matrix(testutil::random_spec(rng));
    for (long i = 0; i < m.rows; ++i) {
      mpz_class row = 0;
      for (long j = 0; j < m.cols; ++j) row += m(i, j);
      CHECK(row == 1);
    }
  }
}
