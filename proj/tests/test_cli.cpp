#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using bclink::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name; }

}  // namespace

TEST_CASE("h subcommand") {
  auto r = call({"h", "--ell", "3", "--alpha", "1/2", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "h=2 sigma=(-2,-2)\n");
  r = call({"h", "--ell", "1", "--alpha", "1/3", "1/4"});
  CHECK(r.out == "h=0 sigma=(0,0)\n");
  r = call({"h", "--ell", "3", "--alpha", "1/6", "1/6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("undefined: alpha on Alexander root locus") != std::string::npos);
  CHECK(call({"h", "--ell", "0", "--alpha", "1/3", "1/4"}).code == 3);
  CHECK(call({"h", "--ell", "-3", "--alpha", "1/2", "1/2"}).out == "h=-2 sigma=(2,2)\n");
}

TEST_CASE("angle input forms") {
  CHECK(call({"h", "--ell", "3", "--alpha", "1.5707963267948966", "1.5707963267948966", "--radians"}).out ==
        "h=2 sigma=(-2,-2)\n");
  CHECK(call({"h", "--ell", "3", "--alpha", "0.5", "1/2"}).code == 64);
  CHECK(call({"h", "--ell", "3", "--alpha", "1/2", "1/2", "--radians"}).code == 64);
  CHECK(call({"h", "--ell", "3", "--alpha", "1/2"}).code == 64);
  CHECK(call({"h", "--ell", "3", "--alpha", "3/2", "1/2"}).code == 64);
  CHECK(call({"h", "--ell", "3", "--alpha", "1/0", "1/2"}).code == 64);
  CHECK(call({"h", "--ell", "3", "--alpha", "4", "1/2", "--radians"}).code == 64);
  CHECK(call({}).code == 64);
  CHECK(call({"bogus"}).code == 64);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("curve subcommand") {
  auto r = call({"curve", "--ell", "1", "--alpha", "1/2", "1/2", "--samples", "5", "--path", "quat"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "phi,theta,provenance");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(','), c2 = line.rfind(',');
    const double phi = std::stod(line.substr(0, c1));
    const double theta = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double want = std::min(2 * phi, 2 * bclink::kPi - 2 * phi);
    CHECK(std::abs(theta - want) < 1e-12);
    CHECK(line.substr(c2 + 1) == "quaternion-path");
    ++rows;
  }
  CHECK(rows == 5);

  r = call({"curve", "--ell", "4", "--alpha", "2/5", "3/7", "--samples", "1000"});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("max_abs_delta_theta=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 20)) < 1e-8);

  CHECK(call({"curve", "--ell", "1", "--alpha", "1/2", "1/2", "--samples", "0"}).code == 64);
  CHECK(call({"curve", "--ell", "3", "--alpha", "1/6", "1/6"}).code == 2);
  CHECK(call({"curve", "--ell", "3", "--alpha", "1/3", "1/6", "--path", "nope"}).code == 64);
  // Byte-identical output across runs.
  CHECK(call({"curve", "--ell", "3", "--alpha", "1/3", "1/5", "--samples", "50"}).out ==
        call({"curve", "--ell", "3", "--alpha", "1/3", "1/5", "--samples", "50"}).out);
}

TEST_CASE("regions subcommand") {
  auto r = call({"regions", "--ell", "2", "--res", "100"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# ell=2 res=100");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 99);
  std::vector<int> mid;
  std::stringstream ss(rows[49]);
  for (std::string cell; std::getline(ss, cell, ',');) mid.push_back(std::stoi(cell));
  REQUIRE(mid.size() == 99);
  CHECK(mid[49] == 1);
  CHECK(mid[0] == 1);  // (pi/2, pi/100): sum past pi/2
  CHECK(rows[9].substr(0, 2) == "0,");

  r = call({"regions", "--ell", "4", "--res", "200", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  CHECK(r.out.find("<line") != std::string::npos);

  r = call({"regions", "--ell", "-2", "--res", "10"});
  CHECK(r.out.find("-1") != std::string::npos);
  CHECK(call({"regions", "--ell", "0"}).code == 3);
}

TEST_CASE("sigma subcommand") {
  const std::string path = temp_path("bclink_l2.json");
  auto r = call({"seifert", "--ell", "2", "-o", path});
  REQUIRE(r.code == 0);
  r = call({"sigma", "--json", path, "--alpha", "1/2", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("sigma=-1 ", 0) == 0);
  CHECK(r.out.find("n_zero=0") != std::string::npos);

  const std::string l3 = temp_path("bclink_l3.json");
  REQUIRE(call({"seifert", "--ell", "3", "-o", l3}).code == 0);
  r = call({"sigma", "--json", l3, "--alpha", "1/6", "1/6"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);

  const std::string bad = temp_path("bclink_bad.json");
  {
    std::ofstream f(bad);
    f << R"({"mu": 2, "rank": 1, "matrices": {"++": [[-1]], "+-": [[0]], "-+": [[0]]}})";
  }
  CHECK(call({"sigma", "--json", bad, "--alpha", "1/2", "1/2"}).code == 65);
  {
    std::ofstream f(bad);
    f << R"({"mu": 2, "rank": 1, "matrices": {"++": [[-1]], "+-": [[0]], "-+": [[0]], "--": [[2]]}})";
  }
  r = call({"sigma", "--json", bad, "--alpha", "1/2", "1/2"});
  CHECK(r.code == 65);
  CHECK(r.err.find("A^-- != (A^++)^T") != std::string::npos);
  {
    std::ofstream f(bad);
    f << "{ not json";
  }
  CHECK(call({"sigma", "--json", bad, "--alpha", "1/2", "1/2"}).code == 65);
  CHECK(call({"sigma", "--json", path, "--alpha", "1/2"}).code == 64);
  std::remove(path.c_str());
  std::remove(l3.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("verify subcommand") {
  auto r = call({"verify", "--ell", "3", "--res", "7"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ell"] == 3);
  CHECK(j["failed"] == 0);
  CHECK(call({"verify", "--ell", "0..0"}).code == 3);
  r = call({"verify", "--ell=-2..2", "--res", "20"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 4);
  r = call({"verify", "--ell", "2", "--res", "10", "--verbose"});
  CHECK(nlohmann::json::parse(r.out).contains("points"));
  CHECK(call({"verify", "--ell", "3..1"}).code == 64);
}
