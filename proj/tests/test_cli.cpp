#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "zschur/serialize.hpp"
#include "zschur/zero_sum.hpp"

#ifndef ZSCHUR_CLI
#error "ZSCHUR_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ZSCHUR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json strip_volatile(nlohmann::json j) {
  j.erase("nodes");
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("compute finite instance") {
  const auto res = run("compute --k 4 --r 2");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("status") == "finite");
  CHECK(j.at("value") == 5);
  CHECK(j.at("k") == 4);
  CHECK(j.at("r") == 2);
  CHECK(j.at("palette") == "full");
  // the reported witness must decode to an avoiding coloring of [1,4]
  const auto chi = zschur::parse_coloring(j.at("witness").get<std::string>(), 2);
  CHECK(chi.length() == 4);
  CHECK_FALSE(zschur::find_any_zero_sum(chi, zschur::Params{4, 2}).has_value());
}

TEST_CASE("compute infinite instance") {
  const auto res = run("compute --k 3 --r 4");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("status") == "infinite");
  CHECK_FALSE(j.contains("value"));
}

TEST_CASE("compute binary palette") {
  const auto res = run("compute --k 6 --r 3 --binary");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("value") == 13);
  CHECK(j.at("palette") == "binary");
}

TEST_CASE("budget exhaustion exits 3 with a lower bound") {
  const auto res = run("compute --k 10 --r 5 --budget 0.3 --threads 2");
  CHECK(res.exit_code == 3);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("status") == "unresolved");
  CHECK(j.at("lower_bound").get<long long>() >= 9);
  CHECK(j.contains("witness"));
}

TEST_CASE("identical invocations give identical machine output") {
  const auto a = nlohmann::json::parse(run("compute --k 6 --r 3 --threads 2").out);
  const auto b = nlohmann::json::parse(run("compute --k 6 --r 3 --threads 2").out);
  CHECK(strip_volatile(a) == strip_volatile(b));
}

TEST_CASE("enumerate prints one tuple per line") {
  CHECK(run("enumerate --t 4 --k 3").out == "1 3\n2 2\n");
  CHECK(run("enumerate --t 6 --k 4").out == "1 1 4\n1 2 3\n2 2 2\n");
  CHECK(run("enumerate --t 10 --k 3 --count-only").out == "5\n");
  CHECK(run("enumerate --t 1 --k 3").out.empty());
}

TEST_CASE("check prints the witness or avoiding") {
  const auto avoiding = run("check --coloring 0110 --k 3 --r 3");
  CHECK(avoiding.exit_code == 0);
  CHECK(nlohmann::json::parse(avoiding.out).at("zero_sum") == false);

  const auto admits = run("check --coloring 0101 --k 4 --r 2");
  CHECK(admits.exit_code == 0);
  const auto j = nlohmann::json::parse(admits.out);
  CHECK(j.at("zero_sum") == true);
  CHECK(j.at("solution").at("color_sum") == 0);
}

TEST_CASE("verify family reports") {
  const auto res = run("verify --family t4 --k 9");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("avoids") == true);
  CHECK(j.at("claimed_bound") == 24);
  CHECK(j.at("length") == 23);

  CHECK(run("verify --family t4 --k 7").exit_code == 2);   // inapplicable
  CHECK(run("verify --family bogus --k 6").exit_code == 2);
}

TEST_CASE("verify sweep honors the applicability predicate") {
  const auto res = run("verify --family p3 --all-k-up-to 10");
  CHECK(res.exit_code == 0);
  const auto arr = nlohmann::json::parse(res.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 4);  // k = 4, 6, 8, 10
  for (const auto& entry : arr) CHECK(entry.at("avoids") == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("compute --k 4").exit_code == 2);
  CHECK(run("--bogus-flag compute --k 4 --r 2").exit_code == 2);
  CHECK(run("enumerate --t 0 --k 3").exit_code == 2);
}

TEST_CASE("tables runs tier a of the binary table and exits clean") {
  const auto res = run("tables --table 2 --tier a --output -");
  CHECK(res.exit_code == 0);
  const auto arr = nlohmann::json::parse(res.out);
  REQUIRE(arr.is_array());
  int matches = 0;
  for (const auto& cell : arr) {
    CHECK(cell.at("verdict") != "mismatch");
    if (cell.at("verdict") == "match") ++matches;
  }
  CHECK(matches == static_cast<int>(arr.size()));
}

TEST_SUITE_END();
