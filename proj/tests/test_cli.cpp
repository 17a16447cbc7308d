#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cantor/cli.hpp"

using cantor::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("quasigreedy") {
  Result r = cli({"quasigreedy", "--base", "per:[3,phi,phi]"});
  CHECK(r.code == 0);
  CHECK(r.out == "(210)^ω\n(102)^ω\n1(110)^ω\n");
  Result j = cli({"--json", "quasigreedy", "--base", "per:[3,phi,phi]"});
  CHECK(j.code == 0);
  auto doc = json_of(j);
  CHECK(doc["complete"] == true);
  CHECK(doc["classes"][2]["quasi_greedy"]["word"] == "1(110)");
  CHECK(doc["classes"][0]["greedy"]["word"] == "3");
}

TEST_CASE("val and expansions") {
  CHECK(cli({"val", "--base", "per:[phi,phi]", "--word", "110"}).out == "1\n");
  CHECK(cli({"val", "--base", "per:[3,phi,phi]", "--word", "210(110)"}).out == "(-1+3*sqrt(5))/6\n");
  CHECK(cli({"expand", "--base", "per:[sqrt(6),3,(2+sqrt(6))/3]", "--x", "1"}).out == "2(10)^ω\n");
  Result tm = cli({"expand", "--base", "thue-morse", "--x", "1", "--json"});
  CHECK(tm.code == 0);
  CHECK(json_of(tm)["word"] == "2001011");
  Result e1 = cli({"expand1", "--base", "per:[(16+5*sqrt(10))/9,9]", "--shift", "1"});
  CHECK(e1.out == "d  = 90^ω\nd* = 834(27)^ω\n");
  Result cut = cli({"expand", "--base", "pre:[3] per:[sqrt(6)*(2+sqrt(6))]", "--x", "1/2", "--max-steps", "30"});
  CHECK(cut.code == 3);
}

TEST_CASE("decisions and exit codes") {
  CHECK(cli({"admissible", "--base", "per:[3,phi,phi]", "--word", "210(110)"}).code == 0);
  CHECK(cli({"admissible", "--base", "per:[3,phi,phi]", "--word", "(210)"}).code == 1);
  CHECK(cli({"admissible", "--base", "per:[3,phi,phi]", "--word", "(210)", "--closure"}).code == 0);
  CHECK(cli({"greedy-check", "--base", "per:[1+phi,2]", "--word", "2(10)", "--x", "1"}).code == 0);
  CHECK(cli({"greedy-check", "--base", "per:[31/10,420/341]", "--word", "2(10)", "--x", "1"}).code == 1);
  CHECK(cli({"parry2", "--base", "per:[phi,phi]", "--word", "110"}).code == 0);
  CHECK(cli({"parry2", "--base", "per:[phi,phi]", "--word", "(10)"}).code == 1);
  Result notone = cli({"parry2", "--base", "per:[phi,phi]", "--word", "2"});
  CHECK(notone.code == 1);
  CHECK(notone.err.find("NotARepresentationOf1") != std::string::npos);
  CHECK(cli({"val", "--base", "per:[1,2]", "--word", "1"}).code == 2);
  CHECK(cli({"val", "--base", "per:[2]", "--word", "1("}).code == 2);
  CHECK(cli({"val", "--base", "per:[2]"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"automaton", "--base", "pre:[sqrt(13)] per:[(1+sqrt(13))/2,(5+sqrt(13))/6]"}).code == 2);
  CHECK(cli({"automaton", "--base", "pre:[3] per:[sqrt(6)*(2+sqrt(6))]", "--max-steps", "300"}).code == 3);
  CHECK(cli({"solve", "--word", "110", "--max-steps", "3"}).code == 4);
  CHECK(cli({"solve", "--word", "1"}).code == 1);
}

TEST_CASE("automaton export") {
  Result r = cli({"automaton", "--base", "per:[phi*phi,3+sqrt(5)]", "--trim", "--json"});
  CHECK(r.code == 0);
  auto doc = json_of(r);
  CHECK(doc["version"] == 1);
  CHECK(doc["states"].size() == 6);
  CHECK(doc["edges"].size() == 10);
  Result dot = cli({"automaton", "--base", "per:[phi*phi,3+sqrt(5)]", "--dot"});
  CHECK(dot.out.rfind("digraph shift_automaton {", 0) == 0);
  CHECK(cli({"automaton", "--base", "per:[phi*phi,3+sqrt(5)]"}).out.rfind("12 states, 2 initial", 0) == 0);
  Result f = cli({"forbidden", "--base", "per:[(1+sqrt(13))/2,(5+sqrt(13))/6]", "--max-len", "7"});
  CHECK(f.out.find("\n2002\n") != std::string::npos);
  CHECK(f.out.find("\n200002\n") != std::string::npos);
}

TEST_CASE("solver commands") {
  auto doc = json_of(cli({"--json", "solve", "--word", "110", "--tol", "1e-12"}));
  CHECK(doc["certificate"]["g_lo_sign"] == 1);
  CHECK(doc["polynomial"] == nlohmann::json::array({"1", "-1", "-1"}));
  auto alt = json_of(cli({"solve", "--word", "110", "--p", "2", "--tail", "2", "--tol", "1/1000", "--json"}));
  CHECK(alt["tail"] == nlohmann::json::array({"2"}));
  CHECK(alt["c"] == nlohmann::json::array({"3/2"}));
  Result bad_tail = cli({"solve", "--word", "11", "--p", "2", "--tail", "3"});
  CHECK(bad_tail.code == 2);
  CHECK(bad_tail.err.find("TailInequalityViolated") != std::string::npos);
  auto cb = json_of(cli({"construct-base", "--word", "(102)", "--blocks", "3", "--json"}));
  CHECK(cb["log"].size() == 3);
  CHECK(cb["log"][1]["n"] == 4);
  CHECK(cli({"construct-base", "--word", "11"}).code == 2);
}

TEST_CASE("json output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"--json", "quasigreedy", "--base", "per:[(16+5*sqrt(10))/9,9]"},
           {"--json", "automaton", "--base", "per:[phi*phi,3+sqrt(5)]", "--trim"},
           {"--json", "forbidden", "--base", "per:[3,phi,phi]", "--max-len", "6"},
           {"--json", "solve", "--word", "201", "--tol", "1/1000000"}}) {
    Result a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_NOTHROW(json_of(a));
  }
}

TEST_CASE("budget from the environment") {
  ::setenv("CANTOR_MAX_STEPS", "5", 1);
  Result r = cli({"expand", "--base", "pre:[3] per:[sqrt(6)*(2+sqrt(6))]", "--x", "1/2", "--json"});
  ::unsetenv("CANTOR_MAX_STEPS");
  CHECK(r.code == 3);
  CHECK(json_of(r)["prefix"].size() == 5);
}
