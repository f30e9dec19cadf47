#include "bicirc/arithmetic.hpp"

#include <cassert>
#include <map>

#include "bicirc/laurent.hpp"

namespace bicirc {

ParityProfile parity_profile(const BicirculantSpec& spec) {
  ParityProfile p;
  p.r = spec.r();
  p.t = spec.t();
  p.s = spec.s();
  for (long a : spec.alphas) (a % 2 != 0 ? p.k1 : p.k2)++;
  for (long b : spec.betas) (b % 2 != 0 ? p.m1 : p.m2)++;
  for (long g : spec.gammas) (g % 2 != 0 ? p.h1 : p.h2)++;
  return p;
}

namespace {

// Pollard-Brent rho; n must be odd, composite, > 1.
mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    mpz_class y = rng.get_z_range(n - 3) + 2;
    mpz_class c = rng.get_z_range(n - 2) + 1;
    mpz_class x = y, q = 1, g = 1, ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  }
}

void factorize(mpz_class n, std::map<mpz_class, unsigned long>& out) {
  assert(n >= 1);
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      out[d]++;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
    }
  }
  long d = 17;
  while (n > 1 && d <= 1000000 && mpz_class(d) * d <= n) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      out[d]++;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
    }
    d += 2;
  }
  if (n == 1) return;
  if (mpz_class(d) * d > n || mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out[n]++;
    return;
  }
  // n is composite with no small factors; split recursively.
  const mpz_class g = pollard_brent(n, 0x9e3779b97f4a7c15ULL);
  factorize(g, out);
  factorize(n / g, out);
}

}  // namespace

mpz_class square_free_part(const mpz_class& m) {
  if (m <= 0)
    throw NonPositive("square-free part of " + m.get_str() + " is undefined");
  std::map<mpz_class, unsigned long> fac;
  factorize(m, fac);
  mpz_class v = 1;
  for (const auto& [prime, exp] : fac)
    if (exp % 2 != 0) v *= prime;
  return v;
}

SquareStructure square_structure_constants(const BicirculantSpec& spec) {
  const ParityProfile p = parity_profile(spec);
  const mpz_class spokes = 2 * p.s + 1;
  const mpz_class diff2 = mpz_class(p.h2 - p.h1) * (p.h2 - p.h1);
  const mpz_class a1 = 4 * p.k1 + p.s + 1;
  const mpz_class a3 = 4 * p.k1 + p.s + 3;
  const mpz_class b1 = 4 * p.m1 + p.s + 1;
  const mpz_class b3 = 4 * p.m1 + p.s + 3;

  mpz_class q_inner;
  switch (classify(spec)) {
    case GammaClass::G1: q_inner = spokes; break;
    case GammaClass::G2: q_inner = spokes * (a3 * b1 - diff2); break;
    case GammaClass::G3: q_inner = spokes * (a1 * b3 - diff2); break;
    case GammaClass::G4: q_inner = spokes * (a3 * b3 - diff2); break;
  }
  const mpz_class l_inner = spokes * (a1 * b1 - diff2);
  if (q_inner <= 0 || l_inner <= 0)
    throw NegativeConstant("square-structure constant is not positive: q = " +
                           q_inner.get_str() + ", l = " + l_inner.get_str());
  return SquareStructure{square_free_part(q_inner), square_free_part(l_inner)};
}

SquareWitness verify_square_structure(const BicirculantSpec& spec,
                                      const ForestCount& f) {
  const GammaClass cls = classify(spec);
  const SquareStructure ss = square_structure_constants(spec);
  const long branch_n = (cls == GammaClass::G1) ? spec.n : spec.n / 2;
  const mpz_class& constant = (branch_n % 2 != 0) ? ss.q : ss.l;

  mpz_class quotient, rem;
  mpz_tdiv_qr(quotient.get_mpz_t(), rem.get_mpz_t(), f.value.get_mpz_t(),
              constant.get_mpz_t());
  if (rem != 0)
    throw NotDivisible("square structure falsified: " + constant.get_str() +
                       " does not divide f = " + f.value.get_str() + " at n = " +
                       std::to_string(spec.n));
  mpz_class root, sqrem;
  mpz_sqrtrem(root.get_mpz_t(), sqrem.get_mpz_t(), quotient.get_mpz_t());
  if (sqrem != 0)
    throw NotAPerfectSquare("square structure falsified: f / " +
                            constant.get_str() + " = " + quotient.get_str() +
                            " is not a perfect square at n = " +
                            std::to_string(spec.n));
  return SquareWitness{constant, root};
}

std::vector<SequenceRow> sequence_table(const BicirculantSpec& family,
                                        long n_from, long n_to) {
  std::vector<SequenceRow> rows;
  const GammaClass cls = classify(family);
  for (long n = n_from; n <= n_to; ++n) {
    BicirculantSpec sp;
    try {
      sp = with_order(family, n);
    } catch (const Error&) {
      continue;  // pattern invalid at this order
    }
    if (classify(sp) != cls) continue;
    const ForestCount f = forest_count_formula(sp);
    const SquareWitness w = verify_square_structure(sp, f);
    rows.push_back(SequenceRow{n, f.value, w.constant, w.root});
  }
  return rows;
}

}  // namespace bicirc
