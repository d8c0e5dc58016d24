#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ymvac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report layout") {
  const Run r = run({"check-bogomolnyi"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  for (const char* k : {"meta", "inputs", "results", "checks", "status"}) CHECK(j.contains(k));
  CHECK(j["meta"]["subcommand"] == "check-bogomolnyi");
  CHECK(!j["meta"]["quantities"].empty());
  CHECK(j["results"]["tables"]["residuals"]["rows"].size() == 20);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("identical configuration gives identical bytes") {
  for (const char* sub : {"profiles", "greens", "rotator"}) {
    CHECK(run({sub}).out == run({sub}).out);
  }
  CHECK(run({"--seed", "9", "greens"}).out != run({"--seed", "10", "greens"}).out);
}

TEST_CASE("tightened tolerance gives exit 3 with the report still written") {
  const Run r = run({"check-bogomolnyi", "--tol", "1e-16"});
  CHECK(r.code == 3);
  CHECK(Json::parse(r.out)["status"] == "consistency_failure");
  CHECK(r.err.find("consistency") != std::string::npos);
}

TEST_CASE("validation failures give exit 2 and an error record") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"profiles", "--eps", "-1"},
        {"winding", "--n", "3..1"},
        {"pheno", "--set", "unknown=1"},
        {"pheno", "--constants", "/nonexistent"},
        {"profiles", "--bogus", "1"},
        {"--output", "xml", "profiles"},
        {}}) {
    const Run r = run(args);
    CHECK(r.code == 2);
    const Json j = Json::parse(r.out);
    CHECK(j["error"]["kind"] == "validation");
    CHECK(!r.err.empty());
  }
}

TEST_CASE("winding range and CSV output") {
  const Run r = run({"winding", "--n", "-2..2", "--output", "csv"});
  REQUIRE(r.code == 0);
  const auto at = r.out.find("# results.tables.degrees\nn,degree,refined,oracle,deviation\n");
  REQUIRE(at != std::string::npos);
  std::istringstream rows(r.out.substr(at));
  std::string line;
  std::getline(rows, line);
  std::getline(rows, line);
  for (int n = -2; n <= 2; ++n) {
    std::getline(rows, line);
    const double degree = std::stod(line.substr(line.find(',') + 1));
    CHECK(std::stoi(line) == n);
    CHECK(degree == doctest::Approx(n).scale(1).epsilon(1e-3));
  }
}

TEST_CASE("rotator single point") {
  const Run r = run({"rotator", "--tau", "1.0", "--theta", "0"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["results"]["max_representation_difference"].get<double>() < 1e-8);
  CHECK(j["results"]["tables"]["representations"]["rows"].size() == 9);
}

TEST_CASE("pheno precedence: flag over file over default") {
  const Run base = run({"pheno", "--constants", YMVAC_DATA_DIR "/constants.txt"});
  REQUIRE(base.code == 0);
  const Json j = Json::parse(base.out);
  CHECK(j["results"]["alpha_mod_zero"].get<double>() == doctest::Approx(0.19).epsilon(0.01));
  const Run over = run({"pheno", "--constants", YMVAC_DATA_DIR "/constants.txt", "--set", "alpha_s=0.3"});
  CHECK(Json::parse(over.out)["inputs"]["constants"]["alpha_s"] == 0.3);
}

TEST_CASE("report to file") {
  const std::string path = "cli_test_report.json";
  const Run r = run({"--out", path, "profiles"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(Json::parse(f)["meta"]["subcommand"] == "profiles");
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check-bogomolnyi") != std::string::npos);
}
