#pragma once

#include <string>
#include <vector>

#include "bicirc/certified.hpp"
#include "bicirc/graph_core.hpp"

namespace bicirc {

// Built-in example families with published reference data: the square-free
// constant pair (q, l) and the closed-form growth constant, expressed as a
// product of surd factors (a + b sqrt(d)) over an integer denominator.
struct ExampleFamily {
  int index = 0;
  std::string name;
  BicirculantSpec pattern;  // at the smallest valid order
  GammaClass cls = GammaClass::G1;
  long q = 0;
  long l = 0;
  struct SurdFactor {
    long a, b, d;
  };
  std::vector<SurdFactor> constant_factors;
  long constant_denominator = 1;
};

const std::vector<ExampleFamily>& example_catalog();

// The published growth constant evaluated as a ball.
CertifiedReal closed_form_constant(const ExampleFamily& fam, long prec);

}  // namespace bicirc
