#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/cli.hpp"
#include "wreath/json_io.hpp"

using wreath::ColoredPermutation;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = wreath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("wire format round trips for the core types", "[json-cli]") {
  const auto g = json::parse(
                     R"({"r":3,"n":2,"perm":[2,1],"colors":[0,1]})")
                     .get<ColoredPermutation>();
  CHECK(g.r == 3);
  CHECK(g.image(1) == 2);
  CHECK(g.color_at(2) == 1);
  CHECK(json(g).dump() == json::parse(json(g).dump()).dump());
  CHECK(json(g).get<ColoredPermutation>() == g);

  CHECK_THROWS(json::parse(R"({"r":2,"n":2,"perm":[1,1],"colors":[0,0]})")
                   .get<ColoredPermutation>());
  CHECK_THROWS(json::parse(R"({"r":2,"n":2,"perm":[2,1],"colors":[0,5]})")
                   .get<ColoredPermutation>());

  const wreath::CycEl x = wreath::CycEl(4, {1, -2, 0, 3});
  CHECK(json(x).get<wreath::CycEl>() == x);

  const auto ct = wreath::class_type(ColoredPermutation(2, 3, {2, 1, 3}, {1, 1, 0}));
  CHECK(json(ct).get<wreath::ClassType>() == ct);
  CHECK_THROWS(json::parse(R"({"r":2,"n":3,"cycles_by_color":[[2],[2]]})")
                   .get<wreath::ClassType>());

  const auto pair = wreath::colored_rsk(ColoredPermutation(2, 3, {2, 1, 3}, {1, 1, 0}));
  const auto back = json(pair).get<wreath::TableauPair>();
  CHECK(back.P == pair.P);
  CHECK(back.Q == pair.Q);
}

TEST_CASE("table and report serializations carry their whole payload",
          "[json-cli]") {
  const auto table = wreath::char_table(2, 2);
  const json j = table;
  CHECK(j.at("r") == 2);
  CHECK(j.at("order") == 8);
  CHECK(j.at("shapes").size() == 5);
  CHECK(j.at("classes").size() == 5);
  CHECK(j.at("classes")[0].contains("representative"));
  CHECK(j.at("values").size() == 5);
  CHECK(j.at("values")[0].size() == 5);

  const json d = wreath::decompose_model(2, 2);
  CHECK(d.at("multiplicities") == json::array({1, 1, 1, 1, 1}));

  const json c = wreath::conjecture_experiment(2, 2);
  CHECK(c.at("all_match") == true);
  CHECK(c.at("groups").size() == 2);
}

TEST_CASE("verification subcommand reports machine-readable checks",
          "[json-cli]") {
  const auto run = run_cli({"verify-all", "--r", "2", "--n", "2"});
  CHECK(run.code == 0);
  const json j = json::parse(run.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("order") == 8);
  REQUIRE(j.at("checks").size() == 11);
  for (const auto& check : j.at("checks")) {
    CHECK(check.at("pass") == true);
    CHECK(check.contains("wall_ms"));
  }
}

TEST_CASE("table subcommand emits parseable output in every format",
          "[json-cli]") {
  const auto as_json = run_cli({"chartable", "--r", "2", "--n", "2"});
  CHECK(as_json.code == 0);
  const json j = json::parse(as_json.out);
  CHECK(j.at("values").size() == 5);

  const auto as_csv =
      run_cli({"chartable", "--r", "2", "--n", "2", "--format", "csv"});
  CHECK(as_csv.code == 0);
  CHECK(as_csv.out.substr(0, 5) == "shape");

  const auto as_text =
      run_cli({"chartable", "--r", "2", "--n", "2", "--format", "text"});
  CHECK(as_text.code == 0);
  CHECK(as_text.out.find("order=8") != std::string::npos);
}

TEST_CASE("root-count subcommand verifies itself", "[json-cli]") {
  const auto table = run_cli({"sqroots", "--r", "2", "--n", "2"});
  CHECK(table.code == 0);
  CHECK(json::parse(table.out).at("pass") == true);

  const auto one = run_cli({"sqroots", "--r", "2", "--n", "2", "--element",
                            R"({"r":2,"n":2,"perm":[1,2],"colors":[0,0]})"});
  CHECK(one.code == 0);
  CHECK(json::parse(one.out).at("count") == 6);

  const auto mismatch =
      run_cli({"sqroots", "--r", "3", "--n", "2", "--element",
               R"({"r":2,"n":2,"perm":[1,2],"colors":[0,0]})"});
  CHECK(mismatch.code == 2);
}

TEST_CASE("insertion subcommand round trips and flags symmetry",
          "[json-cli]") {
  const auto run = run_cli({"rsk", "--r", "2", "--n", "3", "--element",
                            R"({"r":2,"n":3,"perm":[2,1,3],"colors":[1,1,0]})"});
  CHECK(run.code == 0);
  const json j = json::parse(run.out);
  CHECK(j.at("roundtrip") == true);
  CHECK(j.at("absolute_involution") == true);
  CHECK(j.at("P_equals_Q") == true);
  CHECK(run_cli({"rsk", "--r", "2", "--n", "2"}).code == 2);
  CHECK(run_cli({"rsk", "--r", "2", "--n", "2", "--element", "nope"}).code ==
        2);
}

TEST_CASE("model subcommands verify and report", "[json-cli]") {
  const auto verify = run_cli({"model", "verify", "--r", "2", "--n", "2"});
  CHECK(verify.code == 0);
  const json vj = json::parse(verify.out);
  CHECK(vj.at("pass") == true);
  CHECK(vj.at("homomorphism") == true);
  CHECK(vj.at("multiplicities").size() == 5);

  const auto conj = run_cli({"model", "conjecture", "--r", "2", "--n", "3"});
  CHECK(conj.code == 0);
  CHECK(json::parse(conj.out).at("all_match") == true);
  const auto alias = run_cli({"conjecture", "--r", "2", "--n", "3"});
  CHECK(alias.out == conj.out);
}

TEST_CASE("usage problems and size bounds exit with code two", "[json-cli]") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"chartable", "--r", "0", "--n", "2"}).code == 2);
  CHECK(run_cli({"chartable", "--r", "2", "--n", "2", "--format", "yaml"})
            .code == 2);
  CHECK(run_cli({"verify-all", "--r", "4", "--n", "8"}).code == 2);
  const auto bounded = run_cli(
      {"verify-all", "--r", "2", "--n", "3", "--max-order", "10"});
  CHECK(bounded.code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("the size bound can come from the environment", "[json-cli]") {
  setenv("WREATH_MAX_ORDER", "10", 1);
  CHECK(run_cli({"chartable", "--r", "2", "--n", "3"}).code == 2);
  // An explicit flag overrides the environment.
  CHECK(run_cli({"chartable", "--r", "2", "--n", "3", "--max-order",
                 "100000"})
            .code == 0);
  unsetenv("WREATH_MAX_ORDER");
  CHECK(run_cli({"chartable", "--r", "2", "--n", "3"}).code == 0);
}

TEST_CASE("sampled checks are deterministic for a fixed seed", "[json-cli]") {
  const std::vector<std::string> args = {"verify-all", "--r", "2", "--n", "4",
                                         "--seed", "7"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const json ja = json::parse(a.out), jb = json::parse(b.out);
  REQUIRE(ja.at("checks").size() == jb.at("checks").size());
  for (size_t i = 0; i < ja.at("checks").size(); ++i) {
    CHECK(ja.at("checks")[i].at("name") == jb.at("checks")[i].at("name"));
    CHECK(ja.at("checks")[i].at("scope") == jb.at("checks")[i].at("scope"));
    CHECK(ja.at("checks")[i].at("pass") == jb.at("checks")[i].at("pass"));
  }
  const auto other_seed = run_cli({"verify-all", "--r", "2", "--n", "4",
                                   "--seed", "12345"});
  CHECK(other_seed.code == 0);
}
