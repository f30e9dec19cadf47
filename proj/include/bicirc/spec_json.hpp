#pragma once

#include <string>
#include <vector>

#include "bicirc/graph_core.hpp"

namespace bicirc {

// JSON graph-spec {"n": int, "R": [..], "T": [..], "S": [..]}.
// Canonically the arrays hold sorted residues mod n. For n-range sweeps two
// extensions are accepted on input: negative integers (reduced mod the
// instantiation order, so -1 means n-1) and the string "n/2" (the involution
// at half order, requiring an even order).
struct SpecTemplate {
  struct Gen {
    bool half = false;
    long v = 0;
  };
  long n = 0;  // 0 when the JSON omits n
  std::vector<Gen> R, T, S;

  bool has_n() const { return n >= 1; }
  // Instantiates the template at the given order and validates it.
  BicirculantSpec materialize(long order) const;
};

// Throws Error on malformed input.
SpecTemplate parse_spec_json(const std::string& text);

// Canonical JSON with sorted residue arrays; stable across runs, used as the
// cache key and for golden output.
std::string canonical_spec_json(const BicirculantSpec& spec);

}  // namespace bicirc
