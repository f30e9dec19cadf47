#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bicirc/cli.hpp"
#include "bicirc/spec_json.hpp"

using namespace bicirc;
using nlohmann::json;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

const char* kFam1 = R"({"n":3,"R":[1,-1],"T":[],"S":[0]})";
const char* kFam2 = R"({"n":4,"R":[1,-1,"n/2"],"T":[],"S":[0]})";

}  // namespace

TEST_CASE("spec JSON parsing and canonical form") {
  const SpecTemplate t = parse_spec_json(kFam1);
  CHECK(t.n == 3);
  const BicirculantSpec s3 = t.materialize(3);
  CHECK(s3.full_R() == std::vector<long>{1, 2});
  const BicirculantSpec s7 = t.materialize(7);
  CHECK(s7.full_R() == std::vector<long>{1, 6});
  CHECK(canonical_spec_json(s3) == R"({"R":[1,2],"S":[0],"T":[],"n":3})");

  const SpecTemplate t2 = parse_spec_json(kFam2);
  CHECK(classify(t2.materialize(4)) == GammaClass::G2);
  CHECK_THROWS_AS(t2.materialize(5), OddOrderForHalfClass);

  CHECK_THROWS_AS(parse_spec_json("not json"), Error);
  CHECK_THROWS_AS(parse_spec_json(R"({"n":3,"R":"oops"})"), Error);
  CHECK_THROWS_AS(parse_spec_json(R"({"n":3,"R":["n/3"]})"), Error);
}

TEST_CASE("count command") {
  const RunResult r = run_cli({"count", "--spec", kFam1});
  CHECK(r.status == 0);
  CHECK(r.out == "243\n");

  const RunResult k2 = run_cli({"count", "--spec", R"({"n":1,"R":[],"T":[],"S":[0]})"});
  CHECK(k2.status == 0);
  CHECK(k2.out == "3\n");

  const RunResult oracle = run_cli({"count", "--spec", kFam2, "--check-oracle"});
  CHECK(oracle.status == 0);
  CHECK(oracle.out == "3993 (oracle: ok)\n");

  const RunResult both =
      run_cli({"count", "--spec", kFam1, "--check-oracle", "--check-cheb"});
  CHECK(both.status == 0);
  CHECK(both.out == "243 (oracle: ok) (cheb: ok)\n");

  const RunResult at7 = run_cli({"count", "--spec", kFam1, "--n", "7"});
  CHECK(at7.status == 0);
  // 2^7 |2 T_7(7/4) - 2| = 426387 = 3 * 377^2
  CHECK(at7.out == "426387\n");

  const RunResult js = run_cli({"count", "--spec", kFam1, "--format", "json"});
  CHECK(js.status == 0);
  const json j = json::parse(js.out);
  CHECK(j["count"] == "243");
  CHECK(j["class"] == "G1");
}

TEST_CASE("count command error paths") {
  CHECK(run_cli({"count"}).status != 0);                       // no spec
  CHECK(run_cli({"count", "--spec", "garbage"}).status != 0);  // bad json
  CHECK(run_cli({"count", "--spec", R"({"R":[1,-1]})"}).status != 0);  // no n
  CHECK(run_cli({"bogus"}).status != 0);
  const RunResult bad =
      run_cli({"count", "--spec", R"({"n":3,"R":[1],"T":[],"S":[0]})"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify command") {
  const RunResult r =
      run_cli({"verify", "--spec", kFam1, "--n-range", "1..10", "--format", "json"});
  CHECK(r.status == 0);
  const json rows = json::parse(r.out);
  REQUIRE(rows.size() == 8);  // n = 3..10
  CHECK(rows[0]["n"] == 3);
  CHECK(rows[0]["f"] == "243");
  CHECK(rows[0]["constant"] == "3");
  CHECK(rows[0]["root"] == "9");
  CHECK(rows[1]["constant"] == "33");

  // empty range exits 0 with no rows
  const RunResult empty = run_cli({"verify", "--spec", kFam1, "--n-range", "8..7"});
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());

  const RunResult csv =
      run_cli({"verify", "--spec", kFam1, "--n-range", "3..4", "--format", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out == "n,f,constant,root\n3,243,3,9\n4,1617,33,7\n");
}

TEST_CASE("sweep command") {
  const RunResult r =
      run_cli({"sweep", "--spec", kFam1, "--n-range", "3..5", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "n,f\n3,243\n4,1617\n5,10443\n");
}

TEST_CASE("cache reuse is bit-identical and human-readable") {
  const auto dir = std::filesystem::temp_directory_path() / "bicirc_cache_test";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args = {"sweep",     "--spec",         kFam1,
                                         "--n-range", "3..6",           "--cache",
                                         dir.string()};
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    json j;
    in >> j;
    CHECK(j.contains("key"));
    CHECK(j.contains("value"));
    ++files;
  }
  CHECK(files == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output to file") {
  const auto path = std::filesystem::temp_directory_path() / "bicirc_out_test.txt";
  std::filesystem::remove(path);
  const RunResult r =
      run_cli({"count", "--spec", kFam1, "--out", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "243");
  std::filesystem::remove(path);
}

TEST_CASE("asymptote command") {
  const RunResult r = run_cli({"asymptote", "--spec", kFam1, "--n-range", "3..12",
                               "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["routes_agree"] == true);
  const std::string mid = j["constant_roots"]["mid"];
  CHECK(mid.substr(0, 10) == "6.37228132");  // (7 + sqrt 33)/2
  REQUIRE(j["convergence"].size() == 10);
  CHECK(j["convergence"][0]["n"] == 3);
  CHECK(j["convergence"][0]["count"] == "243");
  CHECK(j["convergence"][0].contains("ratio"));
  CHECK(j["convergence"][0]["ratio"].contains("mid"));
  CHECK(j["convergence"][0]["ratio"].contains("rad"));
}

TEST_CASE("examples command, single family") {
  const RunResult r = run_cli({"examples", "--only", "5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1/1 families verified") != std::string::npos);

  const RunResult js = run_cli({"examples", "--only", "5", "--json"});
  CHECK(js.status == 0);
  const json recs = json::parse(js.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["ok"] == true);
  CHECK(recs[0]["family"] == 5);
}
