#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NU_ENGINE_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nuengine-cli-" + name)).string();
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = TEST_DATA_DIR;

}  // namespace

TEST_CASE("build prints a summary") {
  const Run r = run("build C2");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order_nu"] == 8);
  CHECK(j["order_H"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("build S3 --coset-cap 10").code == 3);
  CHECK(run("build nope").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("build S3 --nu-mode sideways").code == 2);
  CHECK(run("build --all --corpus " + kData + "/duplicate.txt").code == 2);
}

TEST_CASE("custom corpus") {
  const Run r = run("build Z5 --corpus " + kData + "/small.txt");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["order_nu"] == 125);
}

TEST_CASE("explicit seed gives a sampled scope") {
  const std::string out = tmp("seed.json");
  REQUIRE(run("verify S3 --suite identities --seed 7 --out " + out).code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    CHECK(c["scope"]["kind"] == "sampled");
    CHECK(c["scope"]["seed"] == 7);
    CHECK(c["scope"]["count"] == 10000);
  }
}

TEST_CASE("default scope is exhaustive for small groups") {
  const std::string out = tmp("default.json");
  REQUIRE(run("verify C3 --suite identities --out " + out).code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  for (const auto& c : j["checks"]) CHECK(c["scope"]["kind"] == "exhaustive");
}

TEST_CASE("tables") {
  const std::string csv = tmp("dihedral.csv");
  REQUIRE(run("table --family dihedral --range 3..8 --format csv --out " + csv).code == 0);
  std::istringstream in(slurp(csv));
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 1 + 6);

  const std::string js = tmp("prufer.json");
  REQUIRE(run("table --family prufer --p 3 --k 1..2 --out " + js).code == 0);
  const auto j = nlohmann::json::parse(slurp(js));
  REQUIRE(j["family"].size() == 2);
  CHECK(j["family"][0]["order_G_derived"] == 3);
  CHECK(j["family"][1]["order_G_derived"] == 9);
}

TEST_CASE("runs are byte identical") {
  const std::string a = tmp("a.json"), b = tmp("b.json");
  REQUIRE(run("table --family corpus --corpus " + kData + "/small.txt --all --out " + a).code == 0);
  REQUIRE(run("table --family corpus --corpus " + kData + "/small.txt --all --jobs 3 --out " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}
