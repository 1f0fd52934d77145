#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "simplex/cli.hpp"

using namespace simplex;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("delta commands", "[cli]") {
  auto r = run({"delta", "hom-count", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"count\":3}\n");

  r = run({"delta", "enumerate", "2", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 3);
  CHECK(run({"delta", "enumerate", "7", "7", "--limit", "10"}).code == 1);

  r = run({"delta", "factorize", "(0,0,2)->3"});
  REQUIRE(r.code == 0);
  const auto f = lines(r.out).at(0);
  CHECK(f["map"].get<MonotoneMap>() == MonotoneMap(3, {0, 0, 2}));
  const auto gens = f["gens"].get<std::vector<DeltaGen>>();
  CHECK(eval_word(3, gens) == MonotoneMap(3, {0, 0, 2}));

  r = run({"delta", "compose", "(0,0)->1", "(1)->2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["text"] == "(0)->1");
  CHECK(run({"delta", "compose", "(0)->1", "(1)->2"}).code == 1);
}

TEST_CASE("mnd verify", "[cli]") {
  const auto r = run({"mnd", "verify"});
  CHECK(r.code == 0);
  const auto js = lines(r.out);
  REQUIRE(js.size() == 3);
  for (const auto& j : js) CHECK(j["holds"] == true);
}

TEST_CASE("lg commands", "[cli]") {
  auto r = run({"lg", "check-axioms", "--max-n", "0"});
  CHECK(r.code == 0);
  auto js = lines(r.out);
  REQUIRE(js.size() == 6);
  CHECK(js.back()["instances"] == 5);
  CHECK(js.back()["passed"] == 5);

  r = run({"lg", "check-axioms", "--flip", "mumu"});
  CHECK(r.code == 1);
  CHECK(run({"lg", "check-axioms", "--flip", "a"}).code == 64);

  r = run({"lg", "boundary", "a{2,1}"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["dom_text"] == "mu{4,2} ; mu{3,1}");
  CHECK(run({"lg", "boundary", "a{2,3}"}).code == 1);
  CHECK(run({"lg", "boundary", "[ | a{2,1} | mu{1,0} ]"}).code == 1);
  CHECK(run({"lg", "boundary", "[ | a{1,0} | mu{1,0} ]"}).code == 0);

  r = run({"lg", "project", "[ | mumu{1,0} | ]"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["equal"] == true);
}

TEST_CASE("lg equal verdicts and exit codes", "[cli]") {
  const auto ax = axiom_sides(AxiomName::Mq, 1, 0);
  auto r = run({"lg", "equal", print(ax.lhs), print(ax.rhs), "--depth", "1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["verdict"] == "equal");

  r = run({"lg", "equal", "[ | a{0,0} | ]", "[ | q{0,0} | ]"});
  CHECK(r.code == 2);
  const auto j = lines(r.out).at(0);
  CHECK(j["reason"] == "boundary-mismatch");
  CHECK(j.contains("witness"));

  r = run({"lg", "equal", print(ax.lhs), print(ax.rhs), "--depth", "3", "--budget", "1"});
  CHECK(r.code == 2);
  CHECK(lines(r.out).at(0)["reason"] == "budget-exhausted");

  CHECK(run({"lg", "equal", "[ x", "id{0}"}).code == 64);
}

TEST_CASE("SIMPLEX_BUDGET", "[cli]") {
  const auto ax = axiom_sides(AxiomName::Mq, 1, 0);
  const std::vector<std::string> args{"lg", "equal", print(ax.lhs), print(ax.rhs), "--depth", "3"};
  ::setenv("SIMPLEX_BUDGET", "1", 1);
  CHECK(run(args).code == 2);
  ::setenv("SIMPLEX_BUDGET", "lots", 1);
  CHECK(run(args).code == 64);
  ::setenv("SIMPLEX_BUDGET", "100000", 1);
  CHECK(run(args).code == 0);
  ::unsetenv("SIMPLEX_BUDGET");
}

TEST_CASE("orientation audit", "[cli]") {
  const auto r = run({"lg", "orientation-audit"});
  CHECK(r.code == 0);
  const auto js = lines(r.out);
  REQUIRE(js.size() == 17);
  CHECK(js.back()["chaining_all"] == 1);
  CHECK(js.back()["shipped_unique"] == true);
}

TEST_CASE("adj commands", "[cli]") {
  auto r = run({"adj", "derive", "--model", "strict-poset", "--max-size", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back()["axioms_passed"] == 5);

  r = run({"adj", "derive", "--mutate", "--max-size", "2"});
  CHECK(r.code == 1);
  CHECK(lines(r.out).back()["ok"] == false);

  CHECK(run({"adj", "derive", "--model", "delta-self"}).code == 0);
  CHECK(run({"adj", "derive", "--model", "sets"}).code == 64);

  r = run({"adj", "axioms"});
  CHECK(r.code == 0);
  const auto js = lines(r.out);
  REQUIRE(js.size() == 2);
  for (const auto& j : js) CHECK(j["boundaries_match"] == true);
  CHECK(run({"adj", "axioms", "--printed-u"}).code == 1);
}

TEST_CASE("model commands", "[cli]") {
  auto r = run({"model", "laws", "--max-size", "2"});
  CHECK(r.code == 0);
  CHECK(run({"model", "laws", "--max-size", "2", "--mutate"}).code == 1);
  CHECK(run({"model", "laws", "--max-size", "9"}).code == 64);

  const auto file = write_temp("simplex_test_poset.json", R"({"n":2,"leq":[[true,false],[false,true]]})");
  CHECK(run({"model", "laws", "--poset", file}).code == 0);
  const auto bad = write_temp("simplex_test_bad.json", R"({"n":2,"leq":[[true,true],[true,true]]})");
  CHECK(run({"model", "laws", "--poset", bad}).code == 1);
  CHECK(run({"model", "laws", "--poset", "/nonexistent/poset.json"}).code == 64);

  r = run({"model", "eval", "[ | etamu{1,0} | ]", "--model", "strict-poset", "--poset", file});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["identity"] == true);
  CHECK(run({"model", "eval", "[ | mumu{0,0} | ]", "--model", "delta-self"}).code == 0);
  CHECK(run({"model", "eval", "[ | p{0,0} | ]", "--mutate"}).code == 1);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == 64);
  CHECK(run({"delta"}).code == 64);
  CHECK(run({"delta", "hom-count", "two", "2"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"delta", "factorize", "(0,0"}).code == 64);
}

TEST_CASE("pretty output", "[cli]") {
  const auto plain = run({"delta", "hom-count", "2", "2"});
  const auto pretty = run({"--pretty", "delta", "hom-count", "2", "2"});
  CHECK(pretty.out != plain.out);
  CHECK(json::parse(pretty.out) == json::parse(plain.out));
  CHECK(run({"delta", "hom-count", "2", "2", "--pretty"}).out == pretty.out);
}

TEST_CASE("repeated runs are byte-identical", "[cli][property]") {
  const std::vector<std::vector<std::string>> commands{
      {"delta", "enumerate", "3", "3"},
      {"lg", "check-axioms"},
      {"lg", "equal", "[ | a{0,0} | ] * [ | mueta{1,0} | ]", "[ | mueta{2,0} | ] * [ | a{0,0} | ]"},
      {"adj", "derive", "--max-size", "2"},
  };
  for (const auto& c : commands) {
    const auto first = run(c);
    const auto second = run(c);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
