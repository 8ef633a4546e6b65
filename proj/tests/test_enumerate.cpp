#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "zschur/enumerate.hpp"

using namespace zschur;

namespace {

std::vector<std::vector<int>> emitted(int t, int k) {
  std::vector<std::vector<int>> out;
  enumerate_solutions(t, k, [&](const std::vector<int>& parts, int) {
    out.push_back(parts);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("small targets, exact sequences") {
  CHECK(emitted(4, 3) == std::vector<std::vector<int>>{{1, 3}, {2, 2}});
  CHECK(emitted(1, 3).empty());
  CHECK(emitted(6, 4) == std::vector<std::vector<int>>{{1, 1, 4}, {1, 2, 3}, {2, 2, 2}});
  for (int k = 2; k <= 7; ++k) {
    const auto all_ones = std::vector<int>(static_cast<size_t>(k) - 1, 1);
    CHECK(emitted(k - 1, k) == std::vector<std::vector<int>>{all_ones});
  }
}

TEST_CASE("k = 2 emits the single tuple (t)") {
  CHECK(emitted(7, 2) == std::vector<std::vector<int>>{{7}});
  CHECK(count_solutions(1, 2) == 1);
}

TEST_CASE("counts") {
  CHECK(count_solutions(10, 3) == 5);
  for (int k = 3; k <= 7; ++k) CHECK(count_solutions(k - 2, k) == 0);
  // 5-part partitions of 14, against the nested-loop oracle
  CHECK(count_solutions(14, 6) == static_cast<long long>(oracle::solution_set(14, 6).size()));
  CHECK(count_solutions(14, 6) == 23);
}

TEST_CASE("set equivalence with the nested-loop oracle") {
  for (int k = 2; k <= 6; ++k) {
    for (int t = 1; t <= 18; ++t) {
      const auto expect = oracle::solution_set(t, k);
      std::set<std::vector<int>> got;
      for (const auto& parts : emitted(t, k)) {
        CHECK(got.insert(parts).second);  // no duplicates
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("emitted tuples are valid and ordered") {
  for (int k : {3, 4, 6}) {
    for (int t : {5, 12, 19}) {
      std::vector<int> prev_reversed;
      for (const auto& parts : emitted(t, k)) {
        long long sum = 0;
        int last = 0;
        for (int x : parts) {
          CHECK(x >= 1);
          CHECK(x >= last);
          last = x;
          sum += x;
        }
        CHECK(sum == t);
        std::vector<int> reversed(parts.rbegin(), parts.rend());
        if (!prev_reversed.empty()) CHECK(reversed < prev_reversed);
        prev_reversed = std::move(reversed);
      }
    }
  }
}

TEST_CASE("count equals collected size") {
  for (int k = 2; k <= 6; ++k)
    for (int t = 1; t <= 15; ++t)
      CHECK(count_solutions(t, k) == static_cast<long long>(collect_solutions(t, k).size()));
}

TEST_CASE("collected solutions carry the target") {
  for (const auto& sol : collect_solutions(9, 4)) CHECK(sol.target == 9);
}

TEST_CASE("visitor can stop the stream") {
  int seen = 0;
  const bool finished = enumerate_solutions(12, 4, [&](const std::vector<int>&, int) {
    ++seen;
    return false;
  });
  CHECK_FALSE(finished);
  CHECK(seen == 1);
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(count_solutions(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_solutions(5, 1), std::invalid_argument);
}

TEST_SUITE_END();
