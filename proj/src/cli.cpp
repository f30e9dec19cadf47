#include "bicirc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bicirc/arithmetic.hpp"
#include "bicirc/example_catalog.hpp"
#include "bicirc/exact_linear.hpp"
#include "bicirc/laurent.hpp"
#include "bicirc/numeric.hpp"
#include "bicirc/spec_json.hpp"

namespace bicirc::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string spec_text;
  std::string spec_file;
  long n = 0;
  std::string n_range;
  long precision = 16384;
  std::string format = "text";
  std::string out_path;
  std::string cache_dir;
};

void add_spec_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--spec", o.spec_text, "graph spec as inline JSON");
  cmd->add_option("--spec-file", o.spec_file, "path to a JSON graph spec");
  cmd->add_option("--n", o.n, "group order (overrides \"n\" in the spec)");
  cmd->add_option("--n-range", o.n_range, "order range A..B");
  cmd->add_option("--precision", o.precision, "adaptive precision ceiling in bits")
      ->default_val(16384);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");
  cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
  cmd->add_option("--cache", o.cache_dir, "directory for the on-disk count cache");
}

SpecTemplate load_template(const CommonOpts& o) {
  if (o.spec_text.empty() == o.spec_file.empty())
    throw Error("exactly one of --spec / --spec-file is required");
  if (!o.spec_text.empty()) return parse_spec_json(o.spec_text);
  std::ifstream in(o.spec_file);
  if (!in) throw Error("cannot open spec file: " + o.spec_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_json(ss.str());
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw Error("--n-range must have the form A..B, got " + text);
  try {
    const long a = std::stol(text.substr(0, pos));
    const long b = std::stol(text.substr(pos + 2));
    return {a, b};
  } catch (const std::exception&) {
    throw Error("--n-range must have the form A..B, got " + text);
  }
}

// ---------------------------------------------------------------------------
// On-disk count cache: one human-readable JSON file per key.
// ---------------------------------------------------------------------------

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }

  bool get(const std::string& key, std::string& value) const {
    if (!enabled()) return false;
    std::ifstream in(path_for(key));
    if (!in) return false;
    json j;
    try {
      in >> j;
    } catch (const json::exception&) {
      return false;
    }
    if (!j.is_object() || j.value("key", "") != key) return false;
    value = j.value("value", "");
    return !value.empty();
  }

  void put(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    json j;
    j["key"] = key;
    j["value"] = value;
    std::ofstream out(path_for(key));
    out << j.dump(2) << "\n";
  }

 private:
  std::string path_for(const std::string& key) const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ + "/" + buf + ".json";
  }

  std::string dir_;
};

mpz_class cached_count(const BicirculantSpec& spec, const Cache& cache) {
  const std::string key = canonical_spec_json(spec) + "|count";
  std::string hit;
  if (cache.get(key, hit)) return mpz_class(hit);
  const mpz_class f = forest_count_formula(spec).value;
  cache.put(key, f.get_str());
  return f;
}

json ball_json(const CertifiedReal& v) {
  return json{{"mid", v.mid_str(30)}, {"rad", v.rad_str()}};
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = nullptr;

  OutputTarget(const CommonOpts& o, std::ostream& fallback) {
    if (o.out_path.empty()) {
      stream = &fallback;
    } else {
      file.open(o.out_path);
      if (!file) throw Error("cannot open output file: " + o.out_path);
      stream = &file;
    }
  }
  std::ostream& get() { return *stream; }
};

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int cmd_count(const CommonOpts& o, bool check_oracle, bool check_cheb,
              std::ostream& out_default, std::ostream& err) {
  const SpecTemplate tmpl = load_template(o);
  const long order = o.n >= 1 ? o.n : tmpl.n;
  if (order < 1) throw Error("no order given: set \"n\" in the spec or pass --n");
  const BicirculantSpec spec = tmpl.materialize(order);
  const Cache cache(o.cache_dir);
  const mpz_class f = cached_count(spec, cache);

  if (spec.gammas.empty())
    err << "note: S is empty, the graph is disconnected; counts remain valid\n";

  std::string oracle_status;
  if (check_oracle) {
    if (2 * spec.n <= 200) {
      const mpz_class g = forest_count_oracle(spec).value;
      if (g != f) {
        err << "route disagreement: formula=" << f.get_str()
            << " oracle=" << g.get_str() << "\n";
        return 1;
      }
      oracle_status = "ok";
    } else {
      oracle_status = "skipped (2n > 200)";
    }
  }
  std::string cheb_status;
  if (check_cheb) {
    const mpz_class g = forest_count_chebyshev(spec, o.precision).value;
    if (g != f) {
      err << "route disagreement: formula=" << f.get_str()
          << " chebyshev=" << g.get_str() << "\n";
      return 1;
    }
    cheb_status = "ok";
  }

  OutputTarget target(o, out_default);
  std::ostream& out = target.get();
  if (o.format == "json") {
    json j;
    j["n"] = spec.n;
    j["class"] = to_string(classify(spec));
    j["count"] = f.get_str();
    if (!oracle_status.empty()) j["oracle"] = oracle_status;
    if (!cheb_status.empty()) j["cheb"] = cheb_status;
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    out << "n,count\n" << spec.n << "," << f.get_str() << "\n";
  } else {
    out << f.get_str();
    if (!oracle_status.empty()) out << " (oracle: " << oracle_status << ")";
    if (!cheb_status.empty()) out << " (cheb: " << cheb_status << ")";
    out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify / sweep
// ---------------------------------------------------------------------------

std::vector<long> orders_in_range(const CommonOpts& o) {
  if (!o.n_range.empty()) {
    const auto [a, b] = parse_range(o.n_range);
    std::vector<long> ns;
    for (long n = a; n <= b; ++n) ns.push_back(n);
    return ns;
  }
  if (o.n >= 1) return {o.n};
  throw Error("one of --n / --n-range is required");
}

int cmd_verify(const CommonOpts& o, std::ostream& out_default, std::ostream& err) {
  const SpecTemplate tmpl = load_template(o);
  const Cache cache(o.cache_dir);
  OutputTarget target(o, out_default);
  std::ostream& out = target.get();

  json rows = json::array();
  if (o.format == "csv") out << "n,f,constant,root\n";
  for (long n : orders_in_range(o)) {
    BicirculantSpec spec;
    try {
      spec = tmpl.materialize(n);
    } catch (const Error&) {
      continue;  // order not valid for this pattern
    }
    const ForestCount f{cached_count(spec, cache)};
    SquareWitness w;
    try {
      w = verify_square_structure(spec, f);
    } catch (const Error& e) {
      err << "FALSIFIED at n=" << n << ": " << e.what() << "\n";
      return 1;
    }
    if (o.format == "json") {
      rows.push_back(json{{"n", n},
                          {"f", f.value.get_str()},
                          {"constant", w.constant.get_str()},
                          {"root", w.root.get_str()}});
    } else if (o.format == "csv") {
      out << n << "," << f.value.get_str() << "," << w.constant.get_str() << ","
          << w.root.get_str() << "\n";
    } else {
      out << "n=" << n << " f=" << f.value.get_str()
          << " constant=" << w.constant.get_str() << " root=" << w.root.get_str()
          << "\n";
    }
  }
  if (o.format == "json") out << rows.dump() << "\n";
  return 0;
}

int cmd_sweep(const CommonOpts& o, std::ostream& out_default, std::ostream&) {
  const SpecTemplate tmpl = load_template(o);
  const Cache cache(o.cache_dir);
  OutputTarget target(o, out_default);
  std::ostream& out = target.get();

  json rows = json::array();
  if (o.format == "csv") out << "n,f\n";
  for (long n : orders_in_range(o)) {
    BicirculantSpec spec;
    try {
      spec = tmpl.materialize(n);
    } catch (const Error&) {
      continue;
    }
    const mpz_class f = cached_count(spec, cache);
    if (o.format == "json") {
      rows.push_back(json{{"n", n}, {"count", f.get_str()}});
    } else if (o.format == "csv") {
      out << n << "," << f.get_str() << "\n";
    } else {
      out << n << " " << f.get_str() << "\n";
    }
  }
  if (o.format == "json") out << rows.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// asymptote
// ---------------------------------------------------------------------------

int cmd_asymptote(const CommonOpts& o, std::ostream& out_default, std::ostream& err) {
  const SpecTemplate tmpl = load_template(o);
  const long base = o.n >= 1 ? o.n : (tmpl.has_n() ? tmpl.n : 0);
  if (base < 1)
    throw Error("no base order given: set \"n\" in the spec or pass --n");
  const BicirculantSpec family = tmpl.materialize(base);
  const GammaClass cls = classify(family);

  const long const_prec = std::min<long>(o.precision, 1024);
  const CertifiedReal by_roots = asymptotic_constant(family, const_prec);
  const SymmetricPolyPack pack = build_pack(family);
  const IntLaurentPoly target =
      (cls == GammaClass::G1) ? pack.p1 : pack.shifted(cls) * pack.p1;
  const CertifiedReal by_integral = mahler_integral(target, 1e-11);
  const bool agree = (by_roots - by_integral).contains_zero();
  if (!agree) {
    err << "Mahler route disagreement: roots=" << by_roots.str(25)
        << " integral=" << by_integral.str(25) << "\n";
    return 1;
  }

  std::vector<long> ns;
  {
    const long step = (cls == GammaClass::G1) ? 1 : 2;
    long a = base, b = base + 20 * step;
    if (!o.n_range.empty()) std::tie(a, b) = parse_range(o.n_range);
    for (long n = a; n <= b; ++n) {
      try {
        (void)with_order(family, n);
      } catch (const Error&) {
        continue;
      }
      ns.push_back(n);
    }
  }
  const std::vector<ConvergencePoint> report = convergence_report(family, ns, 256);

  OutputTarget target_out(o, out_default);
  std::ostream& out = target_out.get();
  if (o.format == "json") {
    json j;
    j["class"] = to_string(cls);
    j["p1"] = pack.p1.to_string();
    if (cls != GammaClass::G1) j["p_shifted"] = pack.shifted(cls).to_string();
    j["constant_roots"] = ball_json(by_roots);
    j["constant_integral"] = ball_json(by_integral);
    j["routes_agree"] = agree;
    json rows = json::array();
    for (const auto& pt : report) {
      rows.push_back(json{{"n", pt.n},
                          {"count", pt.count.get_str()},
                          {"constant", ball_json(by_roots)},
                          {"ratio", ball_json(pt.ratio)}});
    }
    j["convergence"] = rows;
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    out << "n,count,ratio_mid,ratio_rad\n";
    for (const auto& pt : report)
      out << pt.n << "," << pt.count.get_str() << "," << pt.ratio.mid_str(20) << ","
          << pt.ratio.rad_str() << "\n";
  } else {
    out << "class " << to_string(cls) << "\n";
    out << "P1 = " << pack.p1.to_string() << "\n";
    if (cls != GammaClass::G1)
      out << "P" << (cls == GammaClass::G2 ? 2 : cls == GammaClass::G3 ? 3 : 4)
          << " = " << pack.shifted(cls).to_string() << "\n";
    out << "constant (root product)  = " << by_roots.str(20) << "\n";
    out << "constant (log integral)  = " << by_integral.str(20) << "\n";
    out << "routes agree within combined radii\n";
    out << "(certified values: decimal-rounded midpoint +/- radius)\n";
    for (const auto& pt : report)
      out << "n=" << pt.n << " ratio = " << pt.ratio.str(15) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

struct FamilyReport {
  int index = 0;
  std::string name;
  bool ok = false;
  std::string detail;
};

bool run_family(const ExampleFamily& fam, long max_n, FamilyReport& rep,
                std::ostream& err) {
  rep.index = fam.index;
  rep.name = fam.name;

  if (classify(fam.pattern) != fam.cls) {
    err << "family " << fam.index << ": classified "
        << to_string(classify(fam.pattern)) << ", expected " << to_string(fam.cls)
        << "\n";
    return false;
  }
  const SquareStructure ss = square_structure_constants(fam.pattern);
  if (ss.q != fam.q || ss.l != fam.l) {
    err << "family " << fam.index << ": constants (" << ss.q.get_str() << ","
        << ss.l.get_str() << ") != published (" << fam.q << "," << fam.l << ")\n";
    return false;
  }

  // Square structure and oracle agreement across the sweep.
  long checked = 0;
  for (long n = fam.pattern.n; n <= max_n; ++n) {
    BicirculantSpec sp;
    try {
      sp = with_order(fam.pattern, n);
    } catch (const Error&) {
      continue;
    }
    const ForestCount f = forest_count_formula(sp);
    try {
      (void)verify_square_structure(sp, f);
    } catch (const Error& e) {
      err << "family " << fam.index << ": " << e.what() << "\n";
      return false;
    }
    if (2 * n <= 24 && forest_count_oracle(sp).value != f.value) {
      err << "family " << fam.index << ": oracle mismatch at n=" << n << "\n";
      return false;
    }
    ++checked;
  }

  // Chebyshev route at the two largest checked orders <= 20.
  for (long n = std::min<long>(max_n, 20); n >= fam.pattern.n; --n) {
    BicirculantSpec sp;
    try {
      sp = with_order(fam.pattern, n);
    } catch (const Error&) {
      continue;
    }
    if (forest_count_chebyshev(sp).value != forest_count_formula(sp).value) {
      err << "family " << fam.index << ": chebyshev route mismatch at n=" << n
          << "\n";
      return false;
    }
    break;
  }

  // Both Mahler routes against the published closed form.
  const CertifiedReal want = closed_form_constant(fam, 256);
  const CertifiedReal roots = asymptotic_constant(fam.pattern, 1024);
  const SymmetricPolyPack pack = build_pack(fam.pattern);
  const IntLaurentPoly target =
      (fam.cls == GammaClass::G1) ? pack.p1 : pack.shifted(fam.cls) * pack.p1;
  const CertifiedReal integral = mahler_integral(target, 1e-11);
  const double d1 = std::fabs((roots - want).mid_double());
  const double d2 = std::fabs((integral - want).mid_double());
  if (!(d1 < 1e-9 && d2 < 1e-9)) {
    err << "family " << fam.index << ": Mahler constant off: roots diff=" << d1
        << " integral diff=" << d2 << "\n";
    return false;
  }

  std::ostringstream detail;
  detail << "constants (" << fam.q << "," << fam.l << "), " << checked
         << " orders verified, Mahler routes within 1e-9";
  rep.detail = detail.str();
  rep.ok = true;
  return true;
}

int cmd_examples(const CommonOpts& o, int only, bool as_json,
                 std::ostream& out_default, std::ostream& err) {
  OutputTarget target(o, out_default);
  std::ostream& out = target.get();
  const bool json_mode = as_json || o.format == "json";

  json records = json::array();
  int passed = 0, total = 0;
  for (const ExampleFamily& fam : example_catalog()) {
    if (only != 0 && fam.index != only) continue;
    ++total;
    FamilyReport rep;
    const bool ok = run_family(fam, 30, rep, err);
    if (json_mode) {
      records.push_back(json{{"family", fam.index},
                             {"name", fam.name},
                             {"ok", ok},
                             {"detail", rep.detail}});
    } else {
      out << "family " << fam.index << " (" << fam.name << "): "
          << (ok ? "ok" : "FAILED");
      if (ok) out << " -- " << rep.detail;
      out << "\n";
    }
    if (!ok) {
      if (json_mode) out << records.dump() << "\n";
      return 1;
    }
    ++passed;
  }
  if (json_mode) {
    out << records.dump() << "\n";
  } else {
    out << passed << "/" << total << " families verified\n";
  }
  return passed == total && total > 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rooted spanning forest counts of bicirculant graphs"};
  app.name("bicirc-forest");
  app.require_subcommand(1);

  CommonOpts count_opts, verify_opts, sweep_opts, asym_opts, ex_opts;
  bool check_oracle = false, check_cheb = false;
  int only = 0;
  bool ex_json = false;

  CLI::App* count = app.add_subcommand("count", "exact f for one graph");
  add_spec_options(count, count_opts);
  count->add_flag("--check-oracle", check_oracle,
                  "also run det(I+L) (2n <= 200) and compare");
  count->add_flag("--check-cheb", check_cheb,
                  "also run the certified Chebyshev route and compare");

  CLI::App* verify = app.add_subcommand("verify", "square structure over a range");
  add_spec_options(verify, verify_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate f over a range");
  add_spec_options(sweep, sweep_opts);

  CLI::App* asym = app.add_subcommand("asymptote", "growth constant and convergence");
  add_spec_options(asym, asym_opts);

  CLI::App* examples = app.add_subcommand("examples", "verify the built-in families");
  add_spec_options(examples, ex_opts);
  examples->add_option("--only", only, "run a single family (1-6)");
  examples->add_flag("--json", ex_json, "machine-readable records");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (count->parsed()) return cmd_count(count_opts, check_oracle, check_cheb, out, err);
    if (verify->parsed()) return cmd_verify(verify_opts, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, out, err);
    if (asym->parsed()) return cmd_asymptote(asym_opts, out, err);
    if (examples->parsed()) return cmd_examples(ex_opts, only, ex_json, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bicirc::cli
