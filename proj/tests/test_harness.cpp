#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "nsg/fixtures.hpp"
#include "nsg/report.hpp"
#include "nsg/sweep.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + NSG_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nsg_harness_" + name);
}

}  // namespace

TEST_CASE("invariants report") {
  const auto r = run("invariants 10 14 53");
  CHECK(r.code == 0);
  CHECK(r.out.find("delta_max = 7, catenary = 9") != std::string::npos);
  CHECK(r.out.find("minimal=true") != std::string::npos);

  const auto n = run("invariants 1");
  CHECK(n.code == 0);
  CHECK(n.out.find("S = N") != std::string::npos);
}

TEST_CASE("invariants JSON") {
  const auto r = run("invariants 4 9 15 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"generators", "invariants", "betti", "characterization"});
  CHECK(j["characterization"]["witness"] == "thm24.bullet1");
  CHECK(j["generators"] == nlohmann::json::array({4, 9, 15}));

  // Integers only.
  std::function<bool(const nlohmann::ordered_json&)> no_floats = [&](const nlohmann::ordered_json& v) {
    if (v.is_number_float()) return false;
    if (v.is_structured()) {
      for (const auto& x : v) {
        if (!no_floats(x)) return false;
      }
    }
    return true;
  };
  CHECK(no_floats(j));

  const auto n = run("invariants 1 --json");
  REQUIRE(n.code == 0);
  CHECK(nlohmann::ordered_json::parse(n.out)["characterization"].is_null());
}

TEST_CASE("scan bound override") {
  CHECK(run("invariants 7 9 11 13 15 --scan-bound 400").code == 0);
  CHECK(run("invariants 10 14 53 --scan-bound 100").code == 2);
}

TEST_CASE("betti subcommand") {
  const auto r = run("betti 4 9 15 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["elements"] == nlohmann::json::array({24, 27, 30}));
  CHECK(run("betti 5 6 9").code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("invariants 4 6").code == 2);
  CHECK(run("invariants 0 3").code == 2);
  CHECK(run("invariants").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify 4").code == 2);
  CHECK(run("verify 12 --filter some").code == 2);
  CHECK(run("invariants 4 11", "NSG_MAX_GEN=10").code == 2);
  CHECK(run("invariants 4 9", "NSG_MAX_GEN=10").code == 0);
  CHECK(run("invariants 4 9", "NSG_MAX_GEN=abc").code == 2);
}

TEST_CASE("examples subcommand") {
  const auto r = run("examples");
  CHECK(r.code == 0);
  CHECK(r.out.find("14/14 pass") != std::string::npos);

  const auto bad = run("examples --inject-failure");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("expected:") != std::string::npos);

  const auto j = run("examples --json");
  CHECK(j.code == 0);
  const auto parsed = nlohmann::ordered_json::parse(j.out);
  CHECK(parsed["passed"] == 14);
  CHECK(parsed["total"] == 14);
}

TEST_CASE("verify subcommand") {
  const auto r = run("verify 12");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n1,n2,n3,betti_count,delta_max_cf,delta_max_direct,cat_cf,cat_direct,minimal,witness\n", 0) == 0);
  CHECK(r.out.find("\n4,5,7,3,1,1,3,3,true,thm24.bullet2\n") != std::string::npos);

  const auto m = run("verify 30 --filter minimal");
  CHECK(m.code == 0);
  std::istringstream lines(m.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",true,") != std::string::npos);
  }
  CHECK(rows > 0);

  const auto j = run("verify 15 --json");
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::ordered_json::parse(j.out);
  CHECK(parsed["violations"].empty());
}

TEST_CASE("parallel sweeps write the same bytes") {
  const auto a = tmp("serial.csv"), b = tmp("parallel.csv");
  REQUIRE(run("verify 30 --csv " + a.string()).code == 0);
  REQUIRE(run("verify 30 --parallel 4 --csv " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("library sweep ordering is independent of worker count") {
  const auto one = nsg::run_triple_sweep(25, 1);
  const auto many = nsg::run_triple_sweep(25, 8);
  std::ostringstream x, y;
  nsg::write_csv(x, one.records);
  nsg::write_csv(y, many.records);
  CHECK(x.str() == y.str());
}

TEST_CASE("fixture runner reports an injected mismatch") {
  const auto ok = nsg::run_example_fixtures(false);
  CHECK(ok.size() == 14);
  for (const auto& o : ok) CHECK_MESSAGE(o.pass, o.name << ": " << o.actual);
  const auto bad = nsg::run_example_fixtures(true);
  int failures = 0;
  for (const auto& o : bad) failures += !o.pass;
  CHECK(failures == 1);
}
