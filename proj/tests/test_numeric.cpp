#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bicirc/dense_poly.hpp"
#include "bicirc/example_catalog.hpp"
#include "bicirc/exact_linear.hpp"
#include "bicirc/numeric.hpp"
#include "test_util.hpp"

using namespace bicirc;

namespace {

bool root_contains_q(const CertifiedRoot& root, const mpq_class& re) {
  const long p = root.value.prec() + 64;
  return (root.value.re() - CertifiedReal::from_mpq(re, p)).contains_zero() &&
         root.value.im().contains_zero();
}

IntLaurentPoly sym_poly(const mpz_class& c0, const std::vector<mpz_class>& etas) {
  IntLaurentPoly p = IntLaurentPoly::constant(c0);
  for (size_t j = 0; j < etas.size(); ++j) {
    p = p + IntLaurentPoly::monomial(etas[j], static_cast<long>(j + 1));
    p = p + IntLaurentPoly::monomial(etas[j], -static_cast<long>(j + 1));
  }
  return p;
}

}  // namespace

TEST_CASE("find_transform_roots on the published transforms") {
  // 7 - 4w: root 7/4
  {
    ChebTransform u;
    u.u = {7, -4};
    const RootSet rs = find_transform_roots(u, 256);
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].multiplicity == 1);
    CHECK(root_contains_q(rs.roots[0], mpq_class(7, 4)));
  }
  // (4 - 2w)^2 - 1 = 4w^2 - 16w + 15: roots 3/2 and 5/2
  {
    ChebTransform u;
    u.u = {15, -16, 4};
    RootSet rs = find_transform_roots(u, 256);
    REQUIRE(rs.roots.size() == 2);
    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const CertifiedRoot& a, const CertifiedRoot& b) {
                return a.value.re().mid_double() < b.value.re().mid_double();
              });
    CHECK(root_contains_q(rs.roots[0], mpq_class(3, 2)));
    CHECK(root_contains_q(rs.roots[1], mpq_class(5, 2)));
  }
  // constant: no roots
  {
    ChebTransform u;
    u.u = {11};
    CHECK(find_transform_roots(u, 128).roots.empty());
  }
  // repeated root: (5 - 2w)^2 has the double root 5/2
  {
    ChebTransform u;
    u.u = {25, -20, 4};
    const RootSet rs = find_transform_roots(u, 256);
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].multiplicity == 2);
    CHECK(rs.total_multiplicity() == 2);
    CHECK(root_contains_q(rs.roots[0], mpq_class(5, 2)));
  }
}

TEST_CASE("certified_roots handles complex and repeated roots") {
  // x^2 + 1: roots +-i
  {
    const RootSet rs = certified_roots({mpz_class(1), mpz_class(0), mpz_class(1)}, 192);
    REQUIRE(rs.roots.size() == 2);
    for (const auto& r : rs.roots) {
      CHECK(r.value.re().contains_zero());
      CHECK((r.value.im().abs() - CertifiedReal::from_long(1, 192)).contains_zero());
    }
  }
  // (x^2 + x + 1)^2 (x - 3)
  {
    using poly::ZPoly;
    const ZPoly q = poly::mul(poly::mul(ZPoly{1, 1, 1}, ZPoly{1, 1, 1}), ZPoly{-3, 1});
    const RootSet rs = certified_roots(q, 192);
    CHECK(rs.total_multiplicity() == 5);
    REQUIRE(rs.roots.size() == 3);
    int doubles = 0, singles = 0;
    for (const auto& r : rs.roots) (r.multiplicity == 2 ? doubles : singles)++;
    CHECK(doubles == 2);
    CHECK(singles == 1);
  }
}

TEST_CASE("cheb_T exact rational checks") {
  const long p = 192;
  const CertifiedComplex w(CertifiedReal::from_mpq(mpq_class(7, 4), p),
                           CertifiedReal(p));
  // T_3(7/4) = 4 (7/4)^3 - 3 (7/4) = 259/16
  const CertifiedComplex t3 = cheb_T(3, w);
  CHECK((t3.re() - CertifiedReal::from_mpq(mpq_class(259, 16), p)).contains_zero());
  CHECK(t3.im().contains_zero());

  // T_1(w) = w
  const CertifiedComplex t1 = cheb_T(1, w);
  CHECK((t1.re() - w.re()).contains_zero());

  // T_n(1) = 1 (z-form degenerates at the branch point; recurrence covers it)
  const CertifiedComplex one = CertifiedComplex::from_real(CertifiedReal::from_long(1, p));
  for (unsigned long n : {0ul, 1ul, 2ul, 5ul, 9ul}) {
    const CertifiedComplex tn = cheb_T(n, one);
    CHECK((tn.re() - CertifiedReal::from_long(1, p)).contains_zero());
    CHECK(tn.im().contains_zero());
  }

  // T_25 at a large argument exercises the z-form path
  const CertifiedComplex big(CertifiedReal::from_long(3, p), CertifiedReal(p));
  const CertifiedComplex t25 = cheb_T(25, big);
  // recurrence reference
  CertifiedComplex tp = one, tc = big;
  for (int j = 2; j <= 25; ++j) {
    const CertifiedComplex tn = (big * tc).mul_2si(1) - tp;
    tp = tc;
    tc = tn;
  }
  CHECK((t25 - tc).re().contains_zero());
  CHECK((t25 - tc).im().contains_zero());
}

TEST_CASE("Chebyshev nesting identity T_m(T_n(w)) = T_{mn}(w)") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> wpick(2.0, 5.0);
  std::uniform_int_distribution<int> mpick(1, 6);
  for (int iter = 0; iter < 25; ++iter) {
    const long p = 192;
    const CertifiedComplex w(CertifiedReal::from_double(wpick(rng), p),
                             CertifiedReal(p));
    const unsigned long m = mpick(rng), n = mpick(rng);
    const CertifiedComplex nested = cheb_T(m, cheb_T(n, w));
    const CertifiedComplex direct = cheb_T(m * n, w);
    CHECK((nested - direct).re().contains_zero());
    CHECK((nested - direct).im().contains_zero());
  }
}

TEST_CASE("forest_count_chebyshev fixed values and route agreement") {
  CHECK(forest_count_chebyshev(parse_spec(3, {1, 2}, {}, {0})).value == 243);
  CHECK(forest_count_chebyshev(parse_spec(4, {1, 2, 3}, {}, {0})).value == 3993);
  // degree-0 transform: the 4-path
  CHECK(forest_count_chebyshev(parse_spec(2, {1}, {}, {0})).value == 21);

  const BicirculantSpec g4 = parse_spec(4, {1, 2, 3}, {2}, {0});
  CHECK(forest_count_chebyshev(g4).value == forest_count_formula(g4).value);

  std::mt19937 rng(900);
  for (int iter = 0; iter < 25; ++iter) {
    const BicirculantSpec spec = testutil::random_spec(rng, 10);
    CAPTURE(spec.n);
    CHECK(forest_count_chebyshev(spec).value == forest_count_formula(spec).value);
  }
}

TEST_CASE("mahler_roots against closed forms") {
  const long p = 256;
  // M(7 - 2(z + 1/z)) = (7 + sqrt 33)/2
  const CertifiedReal m1 = mahler_roots(sym_poly(7, {-2}), p);
  const CertifiedReal want1 =
      (CertifiedReal::from_long(7, p) + CertifiedReal::from_long(33, p).sqrt())
          .mul_2si(-1);
  CHECK((m1 - want1).contains_zero());
  CHECK(m1.rad_double() < 1e-25);

  // constants
  const CertifiedReal mc = mahler_roots(IntLaurentPoly::constant(-9), p);
  CHECK((mc - CertifiedReal::from_long(9, p)).contains_zero());

  // M((4 - (z+1/z))^2 - 1) = (3+sqrt5)(5+sqrt21)/4
  const CertifiedReal m5 = mahler_roots(sym_poly(17, {-8, 1}), p);
  const CertifiedReal want5 =
      ((CertifiedReal::from_long(3, p) + CertifiedReal::from_long(5, p).sqrt()) *
       (CertifiedReal::from_long(5, p) + CertifiedReal::from_long(21, p).sqrt()))
          .mul_2si(-2);
  CHECK((m5 - want5).contains_zero());

  CHECK_THROWS_AS(mahler_roots(IntLaurentPoly(), p), ZeroPolynomial);
}

TEST_CASE("mahler_integral agrees with the root route") {
  // constant
  const CertifiedReal c = mahler_integral(IntLaurentPoly::constant(5), 1e-10);
  CHECK((c - CertifiedReal::from_long(5, c.prec())).contains_zero());

  const IntLaurentPoly p1 = sym_poly(7, {-2});
  const CertifiedReal by_int = mahler_integral(p1, 1e-10);
  const CertifiedReal by_roots = mahler_roots(p1, 512);
  CHECK(by_int.rad_double() <= 1e-10);
  CHECK((by_int - by_roots).contains_zero());

  // product polynomial P2 * P1 for the G2 catalog family
  const IntLaurentPoly prod = sym_poly(11, {-2}) * p1;
  const CertifiedReal bi = mahler_integral(prod, 1e-10);
  const CertifiedReal br = mahler_roots(prod, 512);
  CHECK((bi - br).contains_zero());
}

TEST_CASE("mahler_integral refines consistently with tolerance") {
  const IntLaurentPoly p1 = sym_poly(7, {-2});
  const CertifiedReal coarse = mahler_integral(p1, 1e-6);
  const CertifiedReal fine = mahler_integral(p1, 1e-12);
  CHECK(coarse.rad_double() <= 1e-6);
  CHECK(fine.rad_double() <= 1e-12);
  CHECK((coarse - fine).contains_zero());
}

TEST_CASE("asymptotic_constant matches the catalog closed forms") {
  for (const ExampleFamily& fam : example_catalog()) {
    const CertifiedReal got = asymptotic_constant(fam.pattern, 512);
    const CertifiedReal want = closed_form_constant(fam, 512);
    CAPTURE(fam.index);
    CHECK((got - want).contains_zero());
    CHECK(got.rad_double() < 1e-9);
  }
}

TEST_CASE("convergence_report ratios approach 1") {
  const BicirculantSpec fam = parse_spec(3, {1, 2}, {}, {0});
  const auto pts = convergence_report(fam, {3, 10, 20, 25}, 256);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].count == 243);
  double prev = 1e9;
  for (const auto& pt : pts) {
    const double dist = std::fabs(pt.ratio.mid_double() - 1.0);
    CHECK(dist < prev);
    prev = dist;
  }
  CHECK(std::fabs(pts[2].ratio.mid_double() - 1.0) < 1e-9);  // n = 20
  CHECK(std::fabs(pts[3].ratio.mid_double() - 1.0) < 1e-9);  // n = 25

  // empty graph: constant 1, ratio exactly 1
  const auto flat = convergence_report(parse_spec(4, {}, {}, {}), {5, 9}, 128);
  for (const auto& pt : flat) {
    CHECK(pt.count == 1);
    CHECK((pt.ratio - CertifiedReal::from_long(1, 128)).contains_zero());
  }
}

TEST_CASE("signed root-product identity ties the numeric route to the resultant") {
  // prod_j P(eps_n^j) = (-1)^{nk} eta_k^n prod_l (2 T_n(w_l) - 2), with the
  // left side exact and the right side a certified complex product.
  const long p = 256;
  for (const ExampleFamily& fam : example_catalog()) {
    const SymmetricPolyPack pack = build_pack(fam.pattern);
    for (const IntLaurentPoly* target : {&pack.p1, &pack.shifted(fam.cls)}) {
      const long k = target->symmetric_degree();
      const RootSet rs = find_transform_roots(cheb_transform(*target), p);
      REQUIRE(rs.total_multiplicity() == k);
      for (long n = 1; n <= 6; ++n) {
        const mpz_class exact = cyclotomic_product(*target, n);
        mpz_class lead_pow;
        mpz_pow_ui(lead_pow.get_mpz_t(), target->coeff(k).get_mpz_t(),
                   static_cast<unsigned long>(n));
        CertifiedComplex rhs = CertifiedComplex::from_real(
            CertifiedReal::from_mpz(lead_pow, p));
        const CertifiedComplex one =
            CertifiedComplex::from_real(CertifiedReal::from_long(1, p));
        for (const auto& root : rs.roots) {
          const CertifiedComplex factor =
              (cheb_T(static_cast<unsigned long>(n), root.value) - one).mul_2si(1);
          rhs = rhs * factor.pow_ui(static_cast<unsigned long>(root.multiplicity));
        }
        if ((n * k) % 2 != 0) rhs = -rhs;
        CAPTURE(fam.index);
        CAPTURE(n);
        CHECK((rhs.re() - CertifiedReal::from_mpz(exact, p)).contains_zero());
        CHECK(rhs.im().contains_zero());
      }
    }
  }
}

TEST_CASE("error paths: precision ceiling, circle roots") {
  // close roots cannot be separated at a tiny ceiling
  {
    using poly::ZPoly;
    const mpz_class m = mpz_class(1) << 20;
    const ZPoly a{-m, m};            // 2^20 (w - 1)
    const ZPoly b{-m - 1, m};        // 2^20 w - (2^20 + 1), root 1 + 2^-20
    const ZPoly close = poly::mul(a, b);
    CHECK_THROWS_AS(certified_roots(close, 16), PrecisionExhausted);
    const RootSet rs = certified_roots(close, 512);
    CHECK(rs.total_multiplicity() == 2);
    CHECK(rs.roots.size() == 2);
  }
  // ceiling below the starting precision
  CHECK_THROWS_AS(forest_count_chebyshev(parse_spec(3, {1, 2}, {}, {0}), 64),
                  PrecisionExhausted);

  // (z + 1)^2 / z has the double root -1 on the unit circle
  const IntLaurentPoly on_circle =
      IntLaurentPoly::monomial(1, 1) + IntLaurentPoly::constant(2) +
      IntLaurentPoly::monomial(1, -1);
  CHECK_THROWS_AS(mahler_roots(on_circle, 1024), RootOnUnitCircle);
  CHECK_THROWS_AS(mahler_integral(on_circle, 1e-9), ToleranceNotMet);
}

TEST_CASE("root enclosures refine consistently with precision") {
  ChebTransform u;
  u.u = {15, -16, 4};
  const RootSet lo = find_transform_roots(u, 128);
  const RootSet hi = find_transform_roots(u, 256);
  REQUIRE(lo.roots.size() == hi.roots.size());
  for (size_t i = 0; i < lo.roots.size(); ++i) {
    double best = 1e300;
    for (size_t j = 0; j < hi.roots.size(); ++j) {
      const CertifiedComplex d = lo.roots[i].value - hi.roots[j].value;
      best = std::min(best, d.abs().mid_double());
    }
    CHECK(best < 1e-20);
  }
}
