#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "twogap/cli.hpp"
#include "twogap/errors.hpp"
#include "twogap/records.hpp"

using namespace twogap;
using twogap::records::Json;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}
}  // namespace

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("7").single());
  const cli::NRange r = cli::parse_range("25..40");
  CHECK(r.lo == 25);
  CHECK(r.hi == 40);
  CHECK_THROWS_AS(cli::parse_range("5..3"), DomainError);
  CHECK_THROWS_AS(cli::parse_range("x"), DomainError);
  CHECK_THROWS_AS(cli::parse_range("-1"), DomainError);
}

TEST_CASE("chars command") {
  const Run r = run({"chars", "--a", "2", "--b", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["eta"].get<double>() == doctest::Approx(0.5493061).epsilon(1e-7));
  CHECK(j["eta1"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(j["eta2"].get<double>() == doctest::Approx(0.8369882).epsilon(1e-7));

  CHECK(run({"chars", "--a", "1", "--b", "2"}).code == 2);
  CHECK(run({"chars", "--a", "2"}).code == 2);
  CHECK(run({}).code == 2);

  const Run c = run({"chars", "--a", "2", "--b", "3", "--format", "csv"});
  REQUIRE(c.code == 0);
  const auto rows = csv(c.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == records::chars_header());
  const double C = std::stod(rows[1][2]);
  CHECK(C < 0.0);
  CHECK(C > -1.0);
}

TEST_CASE("reference commands") {
  const Run d = run({"degenerate", "--a", "3", "--n", "2"});
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out)["L"].get<double>() == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  const Run s = run({"symmetric", "--a", "2", "--m", "3"});
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out)["L"].get<double>() == doctest::Approx(0.0078979).epsilon(1e-4));
}

TEST_CASE("remez command") {
  const Run r = run({"remez", "--a", "2", "--b", "3", "--n", "0"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::stod(j["L"].get<std::string>()) == 1.0);
  CHECK(run({"remez", "--a", "2", "--b", "3", "--n", "4", "--digits", "12"}).code == 2);
  CHECK(run({"remez", "--a", "2", "--b", "3", "--n", "4", "--digits", "abc"}).code == 2);
  CHECK(run({"remez", "--a", "2", "--b", "3", "--n", "4", "--tol", "-1"}).code == 2);
  CHECK(run({"remez", "--a", "2", "--b", "3", "--n", "150", "--digits", "30"}).code == 3);

  const Run sweep = run({"remez", "--a", "2", "--b", "3", "--n", "2..4"});
  REQUIRE(sweep.code == 0);
  const auto rows = csv(sweep.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == records::remez_header());
  CHECK(rows[1][2] == "2");
  CHECK(rows[3][2] == "4");
}

TEST_CASE("compare command") {
  const Run r = run({"compare", "--a", "2", "--b", "2", "--n", "5..6"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == records::compare_header());
  const double l5 = std::stod(rows[1][7]);
  const double l6 = std::stod(rows[2][7]);
  CHECK(l5 == doctest::Approx(l6).epsilon(1e-15));

  const Run s = run({"compare", "--a", "2", "--b", "3", "--n", "1..1", "--digits", "30"});
  REQUIRE(s.code == 0);
  const auto srows = csv(s.out);
  REQUIRE(srows.size() == 2);
  for (int col = 1; col <= 9; ++col) CHECK(std::isfinite(std::stod(srows[1][col])));
  CHECK(srows[1][13].empty());
}

TEST_CASE("compare is deterministic across thread counts") {
  setenv("TWOGAP_THREADS", "1", 1);
  const Run one = run({"compare", "--a", "3", "--b", "1.5", "--n", "3..8"});
  setenv("TWOGAP_THREADS", "3", 1);
  const Run three = run({"compare", "--a", "3", "--b", "1.5", "--n", "3..8"});
  unsetenv("TWOGAP_THREADS");
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
}

TEST_CASE("predict command and --out") {
  const std::string path = "twogap_cli_test_out.json";
  const Run r = run({"predict", "--a", "2", "--b", "3", "--n", "30", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["n"] == 30);
  CHECK(j["L_refined"].is_number());
  std::remove(path.c_str());

  const Run csvr = run({"predict", "--a", "2", "--b", "3", "--n", "1..5"});
  REQUIRE(csvr.code == 0);
  CHECK(csv(csvr.out).size() == 6);
}
