#include "bicirc/example_catalog.hpp"

namespace bicirc {

const std::vector<ExampleFamily>& example_catalog() {
  static const std::vector<ExampleFamily> catalog = [] {
    std::vector<ExampleFamily> fams;
    auto add = [&fams](int idx, std::string name, long n, std::vector<long> R,
                       std::vector<long> T, std::vector<long> S, GammaClass cls,
                       long q, long l,
                       std::vector<ExampleFamily::SurdFactor> factors, long den) {
      ExampleFamily f;
      f.index = idx;
      f.name = std::move(name);
      f.pattern = parse_spec(n, R, T, S);
      f.cls = cls;
      f.q = q;
      f.l = l;
      f.constant_factors = std::move(factors);
      f.constant_denominator = den;
      fams.push_back(std::move(f));
    };
    // BC(Z_n; {1,-1}, {}, {0}) -- prism-like spoked cycle
    add(1, "cycle with spokes", 3, {1, 2}, {}, {0}, GammaClass::G1, 3, 33,
        {{7, 1, 33}}, 2);
    // BC(Z_n; {1,-1,n/2}, {}, {0})
    add(2, "cycle plus involution, spokes", 4, {1, 3, 2}, {}, {0}, GammaClass::G2,
        5, 33, {{7, 1, 33}, {11, 1, 105}}, 4);
    // BC(Z_n; {1,-1}, {n/2}, {0})
    add(3, "cycle, matching side, spokes", 4, {1, 3}, {2}, {0}, GammaClass::G3,
        69, 33, {{7, 1, 33}, {15, 1, 161}}, 4);
    // BC(Z_n; {1,-1,n/2}, {n/2}, {0})
    add(4, "cycle plus involution, matching side", 4, {1, 3, 2}, {2}, {0},
        GammaClass::G4, 93, 33, {{7, 1, 33}, {23, 1, 465}}, 4);
    // BC(Z_n; {1,-1}, {1,-1}, {0}) -- the dihedral Cayley graph Cay(D_2n, {a, a^-1, b})
    add(5, "dihedral prism", 3, {1, 2}, {1, 2}, {0}, GammaClass::G1, 3, 105,
        {{3, 1, 5}, {5, 1, 21}}, 4);
    // BC(Z_n; {1,-1,n/2}, {1,-1,n/2}, {0}) -- Cay(D_2n, {a, a^-1, a^(n/2), b})
    add(6, "dihedral prism plus involution", 4, {1, 3, 2}, {1, 3, 2}, {0},
        GammaClass::G4, 21, 105, {{3, 1, 5}, {5, 1, 21}, {5, 1, 21}, {7, 3, 5}},
        16);
    return fams;
  }();
  return catalog;
}

CertifiedReal closed_form_constant(const ExampleFamily& fam, long prec) {
  CertifiedReal value = CertifiedReal::from_long(1, prec);
  for (const auto& [a, b, d] : fam.constant_factors) {
    const CertifiedReal surd =
        CertifiedReal::from_long(a, prec) +
        CertifiedReal::from_long(b, prec) * CertifiedReal::from_long(d, prec).sqrt();
    value = value * surd;
  }
  return value / CertifiedReal::from_long(fam.constant_denominator, prec);
}

}  // namespace bicirc
