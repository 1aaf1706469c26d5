#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "gs/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
  json report;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = gs::run_cli(args, out, err);
  RunResult r{code, out.str(), err.str(), {}};
  if (!r.out.empty() && r.out[0] == '{') r.report = json::parse(r.out);
  return r;
}

}  // namespace

TEST_CASE("cyclic subcommand reproduces the Z6 case") {
  auto r = run({"cyclic", "--n", "6", "--set", "1,2,3", "--k", "1,1,1"});
  REQUIRE(r.code == 0);
  CHECK(r.report["candidates"] == json::array({3, 6}));
  CHECK(r.report["ground"].size() == 2);
  CHECK(r.report["r0"] == 3);
}

TEST_CASE("cyclic reports the empty ground set") {
  auto r = run({"cyclic", "--n", "6", "--set", "0,1,2,4", "--k", "2,2"});
  REQUIRE(r.code == 0);
  CHECK(r.report["ground"].empty());
  CHECK(r.report["r0"].is_null());
}

TEST_CASE("non-ascending partition is a usage error") {
  auto r = run({"cyclic", "--n", "6", "--set", "1,2,3", "--k", "2,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("InvalidPartition") != std::string::npos);
}

TEST_CASE("unknown flag exits 2") {
  CHECK(run({"cyclic", "--bogus", "1"}).code == 2);
}

TEST_CASE("sweep emits one block per partition vector") {
  auto r = run({"sweep", "--n", "6", "--set", "0,1,2,4"});
  REQUIRE(r.code == 0);
  CHECK(r.report["subgroups"].size() == 4);
  REQUIRE(r.report["blocks"].size() == 5);
  CHECK(r.report["blocks"][3]["k"] == json::array({2, 2}));
  CHECK(r.report["blocks"][3]["ground"].empty());
}

TEST_CASE("zline lists ground moduli") {
  auto r = run({"zline", "--set", "1,2,3", "--k", "1,1,1", "--pmax", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.report["ground_moduli"] == json::array({3, 4, 5, 6, 7, 8, 9, 10}));
  CHECK(r.report["r0_upper_bound"] == 3);
}

TEST_CASE("free HA reports the bound pair") {
  auto r = run({"free", "--gens", "2", "--set", "a,b", "--construct", "HA", "--bounds"});
  REQUIRE(r.code == 0);
  CHECK(r.report["bounds"]["lower"] == "9");
  CHECK(r.report["bounds"]["upper"] == "36");
  CHECK(r.report["ones_ground"] == true);
  CHECK(r.report["profile_counts"] == json::array({1, 1}));
}

TEST_CASE("free avoid") {
  auto r = run({"free", "--avoid", "a,a*b"});
  REQUIRE(r.code == 0);
  CHECK(r.report["avoided"] == true);
  CHECK(r.report["construct"]["degree"] == 5);

  CHECK(run({"free", "--avoid", "e"}).code == 2);
}

TEST_CASE("tree verify passes the desk-scale Theorem 3 cases") {
  auto r = run({"tree", "verify", "--k", "2", "--r", "1", "--R", "2", "--q", "4", "--J", "-1"});
  REQUIRE(r.code == 0);
  CHECK(r.report["pass"] == true);
  CHECK(r.report["formula_count"] == "24");
}

TEST_CASE("tree ground-subgroup stabilizer") {
  auto r = run({"tree", "ground-subgroup", "--k", "2", "--r", "1", "--method", "stabilizer",
                "--degree", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.report["found"] == true);
  CHECK(r.report["index"] == 4);
  CHECK(r.report["generator_images"]["a1"] == "(1 2)");
  CHECK(r.report["ones_ground"] == true);
}

TEST_CASE("cap errors exit 3") {
  auto r = run({"tree", "verify", "--k", "2", "--r", "1", "--R", "2", "--q", "4", "--J", "-1",
                "--state-cap", "100"});
  CHECK(r.code == 3);
}

TEST_CASE("fixed inputs give byte-identical reports") {
  std::vector<std::string> args = {"sweep", "--n", "6", "--set", "0,1,2,4"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.out == b.out);

  // Re-running from the echoed inputs reproduces the same bytes.
  json inputs = a.report["inputs"];
  std::string set;
  for (const auto& v : inputs["set"]) set += (set.empty() ? "" : ",") + v.dump();
  auto c = run({"sweep", "--n", inputs["n"].dump(), "--set", set});
  CHECK(a.out == c.out);
}

TEST_CASE("tsv format flattens the report") {
  auto r = run({"zline", "--set", "0,1", "--k", "1,1", "--pmax", "3", "--format", "tsv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("command\tzline") != std::string::npos);
  CHECK(r.out.find("ground_moduli\t2\t3") != std::string::npos);
}
