#include "cli.hpp"

#include "drsocle/exact.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace drsocle;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("int list parsing") {
  CHECK(cli::parse_int_list("2,1,0") == std::vector<int>{2, 1, 0});
  CHECK(cli::parse_int_list("7") == std::vector<int>{7});
  CHECK_THROWS_AS(cli::parse_int_list(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_int_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_int_list("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_int_list("1,-2"), std::invalid_argument);
}

TEST_CASE("socle command") {
  auto r = run({"socle", "--g", "2", "--d", "1", "--method", "both"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("1/2880") != std::string::npos);

  r = run({"socle", "--g", "2", "--d", "2,1"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("g - 2 + n") != std::string::npos);

  r = run({"socle", "--g", "1", "--d", "0", "--format", "json"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "1/24");
  CHECK(j["equal"] == true);
  CHECK(parse_rational(j["faber"].get<std::string>()) == Rational(1, 24));

  r = run({"socle", "--g", "1", "--d", "2,0,0", "--format", "json"});
  CHECK(r.code == cli::kDisagreement);
  CHECK(nlohmann::json::parse(r.out)["equal"] == false);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"socle", "--g", "2"}).code == cli::kUsage);
  CHECK(run({"socle", "--g", "2", "--d", "1", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"socle", "--g", "2", "--d", "a"}).code == cli::kUsage);
  CHECK(run({"verify", "nosuch"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "dr", "--g-max", "6", "--format", "json"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "dr");
  CHECK(j["config"]["g_max"] == 6);

  r = run({"verify", "topweight", "--g", "2", "--m", "3", "--format", "csv"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("topweight.g2.j3_0,pass") != std::string::npos);
  CHECK(r.out.find("topweight.g2.j1_2,pass") != std::string::npos);

  r = run({"verify", "socle", "--g-max", "2", "--n-max", "2"});
  CHECK(r.code == cli::kOk);
  r = run({"verify", "socle", "--g-max", "1", "--n-max", "3"});
  CHECK(r.code == cli::kDisagreement);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  const auto a = run({"verify", "wheels", "--seed", "9", "--format", "json"});
  const auto b = run({"verify", "wheels", "--seed", "9", "--format", "json"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("environment overrides") {
  setenv("DRSOCLE_Q_ORDER", "7", 1);
  const auto r = run({"verify", "propagator", "--format", "json"});
  unsetenv("DRSOCLE_Q_ORDER");
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)["config"]["q_order"] == 7);
}

TEST_CASE("table command") {
  auto r = run({"table", "socle", "--g-max", "3", "--n-max", "3", "--format", "csv"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("g,d,faber,necklace,equal\n", 0) == 0);
  CHECK(r.out.find("2,1,1/2880,1/2880,true") != std::string::npos);
  CHECK(r.out.find("1,\"2,0,0\",1/36,1/24,false") != std::string::npos);

  r = run({"table", "dr", "--g-max", "4", "--a-max", "3", "--format", "json"});
  CHECK(r.code == cli::kOk);
  const auto rows = nlohmann::json::parse(r.out);
  CHECK(rows.size() == 5 * 7 * 7);

  r = run({"table", "eisenstein", "--k", "2,4,6", "--order", "10"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("| 2   | 0   | -1/24 ") != std::string::npos);
  // sigma_5(10) = 1 + 32 + 3125 + 100000
  CHECK(r.out.find("| 6   | 10  | 103158/1 ") != std::string::npos);
}
