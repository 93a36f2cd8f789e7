#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vermajet/report.hpp"

using namespace vermajet;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<const char*> args) {
  args.insert(args.begin(), "vermajet");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

SuiteConfig small_config() {
  SuiteConfig c;
  c.cases = {{1, 1, 3}, {2, 2, 2}};
  c.disc = {{3, 1}, {3, 2}};
  c.multi = {{1, 1, {2, 3}, 1}};
  c.jacobi = {{2, 0}};
  c.action_vectors = 5;
  return c;
}

}  // namespace

TEST_CASE("filtration subcommand") {
  const auto r = cli({"filtration", "--m", "1", "--n", "1", "--d", "3", "--lmax", "2"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["schema"] == "vermajet/1");
  CHECK(j["dims"] == Json::array({1, 2, 3}));
  CHECK(j["formula_ok"] == true);
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("taylor subcommand") {
  const auto r = cli({"taylor", "--m", "2", "--n", "2", "--d", "2", "--l", "1"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["rank"] == 5);
  CHECK(j["expected"] == 5);
  CHECK(j["kernel"] == 15);
}

TEST_CASE("split, serre, duality, disc subcommands") {
  auto j = Json::parse(cli({"split", "--m", "1", "--n", "1", "--d", "3", "--l", "2"}).out);
  CHECK(j["dim_Ul_g"] == 10);
  CHECK(j["dim_ann"] == 7);
  CHECK(j["split_holds"] == true);
  j = Json::parse(cli({"split", "--m", "1", "--n", "1", "--d", "2", "--l", "3"}).out);
  CHECK(j["asserted"] == false);
  CHECK(j["verdict"] == "pass");
  j = Json::parse(cli({"serre", "--m", "2", "--n", "2", "--d", "2"}).out);
  CHECK(j["roots"].size() == 3);
  CHECK(j["roots"][1]["nilpotency"] == 3);
  j = Json::parse(cli({"duality", "--m", "1", "--n", "2", "--d", "3", "--l", "2"}).out);
  CHECK(j["dim_match"] == true);
  CHECK(j["pairing_vanishes"] == true);
  j = Json::parse(cli({"duality", "--m", "1", "--n", "1", "--d", "3", "--l", "3"}).out);
  CHECK(j["asserted"] == false);
  j = Json::parse(cli({"disc", "--d", "2", "--l", "1"}).out);
  CHECK(j["generators"] == Json::array({"-4*a0*a2 + a1^2"}));
  CHECK(j["irreducibility"] == "certified");
}

TEST_CASE("exit codes") {
  CHECK(cli({"taylor", "--m", "1", "--n", "1", "--d", "3"}).code == 2);
  CHECK(cli({"taylor", "--m", "0", "--n", "1", "--d", "3", "--l", "1"}).code == 2);
  CHECK(cli({"disc", "--d", "2", "--l", "2"}).code == 2);
  CHECK(cli({"--format", "xml", "serre", "--m", "1", "--n", "1", "--d", "1"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"suite", "--config", "/nonexistent/desk.json"}).code == 2);
  const auto capped = cli({"--ambient-cap", "5", "filtration", "--m", "2", "--n", "2", "--d", "3", "--lmax", "1"});
  CHECK(capped.code == 3);
  CHECK(Json::parse(capped.out)["error"]["kind"] == "size_cap");
  CHECK(cli({"disc", "--d", "7", "--l", "1"}).code == 3);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("csv output") {
  const auto r = cli({"taylor", "--m", "1", "--n", "1", "--d", "3", "--l", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("key,value\n", 0) == 0);
  CHECK(r.out.find("rank,2\n") != std::string::npos);
}

TEST_CASE("--out writes a file") {
  const std::string path = "report_test_out.json";
  CHECK(cli({"serre", "--m", "1", "--n", "1", "--d", "2", "--out", path.c_str()}).code == 0);
  std::ifstream in(path);
  const auto j = Json::parse(in);
  CHECK(j["command"] == "serre");
  std::remove(path.c_str());
}

TEST_CASE("suite reports are deterministic") {
  const auto config = small_config();
  const auto a = suite_report(config);
  const auto b = suite_report(config);
  CHECK(a.pass());
  CHECK(render(a, Format::json) == render(b, Format::json));
  CHECK(render(a, Format::csv) == render(b, Format::csv));
  CHECK(a.body["summary"]["failed"] == 0);
  CHECK_FALSE(a.body.contains("timings"));
  const auto csv = render(a, Format::csv);
  CHECK(csv.rfind("check,case,value,expected,status\n", 0) == 0);
}

TEST_CASE("config round trip") {
  const auto j = to_json(default_desk_suite());
  CHECK(to_json(suite_config_from_json(j)) == j);
  CHECK(to_json(load_suite_config(VERMAJET_DESK_CONFIG)) == j);
  CHECK(suite_config_from_json(Json::object()).cases.empty());
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"cases":[{"m":0,"n":1,"d":2}]})")), std::invalid_argument);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"cases":[{"m":1,"n":1,"d":"x"}]})")), std::invalid_argument);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"casez":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"disc":[{"d":2,"l":2}]})")), std::invalid_argument);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"caps":{"ambient":0}})")), std::invalid_argument);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"format":"xml"})")), std::invalid_argument);
}
