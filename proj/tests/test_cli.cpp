#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "stubborn/cli.hpp"
#include "stubborn/graph.hpp"
#include "stubborn/hitting.hpp"

using namespace stubborn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stubborn-opt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "stubborn_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kP3 = write("p3.txt", "0 1\n1 2\n");
const std::string kP4 = write("p4.txt", "0 1\n1 2\n2 3\n");
const std::string kTwp = write("twp.txt", "1 2\n2 3\n1 3\n3 4\n");

}  // namespace

TEST_CASE("evaluate") {
  const Run one = run({"evaluate", "--graph", kP3, "--sets", write("s1.txt", "1\n")});
  REQUIRE(one.code == 0);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["sets"][0]["F"].get<double>() == doctest::Approx(2.0));

  const Run two = run({"evaluate", "--graph", kP3, "--sets", write("s2.txt", "0\n2\n")});
  REQUIRE(two.code == 0);
  const auto j2 = nlohmann::json::parse(two.out);
  REQUIRE(j2["sets"].size() == 2);
  CHECK(j2["sets"][0]["F"].get<double>() == doctest::Approx(7.0));
  CHECK(j2["sets"][1]["F"].get<double>() == doctest::Approx(7.0));

  const Run csv = run({"evaluate", "--graph", kP3, "--format", "csv", "--sets",
                       write("s3.txt", "# comment\n0,1\n")});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("set,F,h_min,h_max,rank\n\"0;1\",1,1,1,", 0) == 0);

  const Run bad = run({"evaluate", "--graph", kP3, "--sets", write("s4.txt", "0\nx,,y\n")});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("line 2") != std::string::npos);

  const Run unknown = run({"evaluate", "--graph", kP3, "--sets", write("s5.txt", "9\n")});
  CHECK(unknown.code == 3);
  const Run blank = run({"evaluate", "--graph", kP3, "--sets", write("s6.txt", "0\n\n1\n")});
  CHECK(blank.code == 3);
}

TEST_CASE("optimize") {
  const Run r = run({"optimize", "--graph", kP4, "--k", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["F_offered"].get<double>() == doctest::Approx(2.0));
  CHECK(j["F_offered"].get<double>() <= j["F_greedy"].get<double>());
  CHECK(j["offered"].size() == 2);

  const Run zero = run({"optimize", "--graph", kP4, "--k", "0"});
  CHECK(zero.code == 2);

  // The matching cover of P3 is {0,1}; k = 3 is clamped to it.
  const Run big = run({"optimize", "--graph", kP3, "--k", "3"});
  REQUIRE(big.code == 0);
  CHECK(big.err.find("warning") != std::string::npos);
  const auto jb = nlohmann::json::parse(big.out);
  CHECK(jb["config"]["k"].get<int>() == 2);
  CHECK(jb["F_offered"].get<double>() == doctest::Approx(1.0));

  const Run custom = run({"optimize", "--graph", kP3, "--k", "1", "--nu", "1", "--cover",
                          write("cover.txt", "1\n")});
  REQUIRE(custom.code == 0);
  CHECK(nlohmann::json::parse(custom.out)["offered"][0] == "1");

  const Run unreachable = run({"optimize", "--graph", kP3, "--k", "1", "--nu", "1"});
  CHECK(unreachable.code == 3);
  CHECK(unreachable.err.find("achievable") != std::string::npos);
}

TEST_CASE("optimize output round-trips through evaluate") {
  const Run r = run({"optimize", "--graph", kTwp, "--k", "2", "--m", "2", "--nu", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  std::string line;
  for (const auto& l : j["offered"]) line += (line.empty() ? "" : ",") + l.get<std::string>();
  const Run ev = run({"evaluate", "--graph", kTwp, "--sets", write("rt.txt", line + "\n")});
  REQUIRE(ev.code == 0);
  const double f = nlohmann::json::parse(ev.out)["sets"][0]["F"].get<double>();
  CHECK(std::abs(f - j["F_offered"].get<double>()) < 1e-9);
}

TEST_CASE("screen") {
  const Run r = run({"screen", "--graph", kP4, "--k", "2", "--count", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["candidates"].get<int>() == 6);
  CHECK_FALSE(j["sampled"].get<bool>());
  REQUIRE(j["top"].size() == 3);
  CHECK(j["top"][0]["S"].get<double>() == 1.0);
  CHECK(j["top"][0]["rho_S"].get<double>() == 1.0);
  CHECK(j["top"][0]["F"].get<double>() == doctest::Approx(2.0));

  const Run weighted = run({"screen", "--graph", kP4, "--k", "2", "--walk", "weighted"});
  CHECK(weighted.code == 2);

  // 60 nodes, k = 4 is C(60,4) = 487635 sets, so candidates are sampled.
  std::string ring;
  for (int i = 0; i < 60; ++i) ring += std::to_string(i) + " " + std::to_string((i + 1) % 60) + "\n";
  const std::string ring_path = write("ring.txt", ring);
  const Run s1 = run({"screen", "--graph", ring_path, "--k", "4", "--count", "5", "--seed", "3"});
  const Run s2 = run({"screen", "--graph", ring_path, "--k", "4", "--count", "5", "--seed", "3"});
  REQUIRE(s1.code == 0);
  CHECK(nlohmann::json::parse(s1.out)["sampled"].get<bool>());
  CHECK(s1.out == s2.out);
}

TEST_CASE("bound") {
  const Run r = run({"bound", "--graph", kP3, "--set", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bounds"]["general"].get<double>() == doctest::Approx(11.0));
  CHECK(j["F"].get<double>() == doctest::Approx(7.0));
  CHECK(j["slack"]["general"].get<double>() == doctest::Approx(4.0));
  CHECK(j["bounds"]["dominant"].is_null());

  const auto tight = nlohmann::json::parse(run({"bound", "--graph", kP3, "--set", "1"}).out);
  CHECK(tight["bounds"]["general"].get<double>() == 2.0);
  CHECK(tight["bounds"]["dominant"].get<double>() == 2.0);
  CHECK(tight["F"].get<double>() == 2.0);
  CHECK(tight["tight"]["general"].get<bool>());

  const auto twp = nlohmann::json::parse(run({"bound", "--graph", kTwp, "--set", "3"}).out);
  CHECK(twp["bounds"]["dominant"].get<double>() == doctest::Approx(6.0));
  CHECK(twp["F"].get<double>() == doctest::Approx(5.0));
  for (const char* key : {"phi", "uncovered", "sigma_star", "d", "bounds", "surrogate"}) {
    CHECK(twp.contains(key));
  }

  const std::string nonrev = write("nonrev.txt", "0 1 2\n1 0 1\n1 2 2\n2 1 1\n2 0 2\n0 2 1\n");
  const Run nr = run({"bound", "--graph", nonrev, "--walk", "weighted", "--set", "0"});
  CHECK(nr.code == 3);
}

TEST_CASE("simulate") {
  const Run r = run({"simulate", "--graph", kP3, "--set", "1", "--steps", "5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "step,error");
  CHECK(lines[2] == "1,0");

  CHECK(run({"simulate", "--graph", kP3, "--set", "1", "--steps", "0"}).code == 2);

  const std::string out_path = (fs::temp_directory_path() / "stubborn_cli_test" / "trace.csv").string();
  const Run to_file =
      run({"simulate", "--graph", kP3, "--set", "0", "--steps", "20", "--out", out_path});
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f(out_path);
  std::size_t rows = 0;
  for (std::string l; std::getline(f, l);) ++rows;
  CHECK(rows == 22);

  const Run a = run({"simulate", "--graph", kP3, "--set", "0", "--steps", "20", "--seed", "4"});
  const Run b = run({"simulate", "--graph", kP3, "--set", "0", "--steps", "20", "--seed", "4"});
  CHECK(a.out == b.out);
}

TEST_CASE("usage and data errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"optimize", "--k", "2"}).code == 2);
  CHECK(run({"optimize", "--graph", kP3, "--k", "2", "--m", "3"}).code == 2);
  CHECK(run({"bound", "--graph", "/nonexistent/graph.txt", "--set", "0"}).code == 3);
  CHECK(run({"bound", "--graph", write("dup.txt", "0 1\n1 0\n"), "--set", "0"}).code == 3);
  CHECK(run({"bound", "--graph", kP3, "--set", "0,1,2"}).code == 3);
}
