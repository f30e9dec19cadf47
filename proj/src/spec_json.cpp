#include "bicirc/spec_json.hpp"

#include <json.hpp>

namespace bicirc {

namespace {

using nlohmann::json;

std::vector<SpecTemplate::Gen> parse_gen_array(const json& arr, const char* name) {
  if (!arr.is_array())
    throw Error(std::string("spec JSON: \"") + name + "\" must be an array");
  std::vector<SpecTemplate::Gen> out;
  for (const auto& e : arr) {
    if (e.is_number_integer()) {
      out.push_back({false, e.get<long>()});
    } else if (e.is_string() && e.get<std::string>() == "n/2") {
      out.push_back({true, 0});
    } else {
      throw Error(std::string("spec JSON: element of \"") + name +
                  "\" must be an integer or \"n/2\": " + e.dump());
    }
  }
  return out;
}

std::vector<long> instantiate(const std::vector<SpecTemplate::Gen>& gens, long order,
                              const char* name) {
  std::vector<long> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.half) {
      if (order % 2 != 0)
        throw OddOrderForHalfClass(std::string("\"n/2\" in ") + name +
                                   " needs an even order, got " +
                                   std::to_string(order));
      out.push_back(order / 2);
    } else {
      long v = g.v % order;
      if (v < 0) v += order;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

BicirculantSpec SpecTemplate::materialize(long order) const {
  if (order < 1)
    throw OutOfRange("order must be positive, got " + std::to_string(order));
  return parse_spec(order, instantiate(R, order, "R"), instantiate(T, order, "T"),
                    instantiate(S, order, "S"));
}

SpecTemplate parse_spec_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("spec JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("spec JSON must be an object");
  SpecTemplate t;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw Error("spec JSON: \"n\" must be an integer");
    t.n = j["n"].get<long>();
  }
  t.R = j.contains("R") ? parse_gen_array(j["R"], "R") : std::vector<SpecTemplate::Gen>{};
  t.T = j.contains("T") ? parse_gen_array(j["T"], "T") : std::vector<SpecTemplate::Gen>{};
  t.S = j.contains("S") ? parse_gen_array(j["S"], "S") : std::vector<SpecTemplate::Gen>{};
  return t;
}

std::string canonical_spec_json(const BicirculantSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["R"] = spec.full_R();
  j["T"] = spec.full_T();
  j["S"] = spec.full_S();
  return j.dump();  // keys are emitted sorted: R, S, T, n
}

}  // namespace bicirc
