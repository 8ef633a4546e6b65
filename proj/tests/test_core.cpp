#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "zschur/core.hpp"
#include "zschur/enumerate.hpp"
#include "zschur/tables.hpp"

using namespace zschur;

TEST_SUITE_BEGIN("core");

TEST_CASE("params validation") {
  CHECK_THROWS_AS((Params{1, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Params{2, 1}.validate()), std::invalid_argument);
  CHECK_NOTHROW((Params{2, 2}.validate()));
  CHECK(Params{6, 3, Palette::Binary}.color_count() == 2);
  CHECK(Params{6, 3, Palette::Full}.color_count() == 3);
}

TEST_CASE("make_solution validates and sums") {
  const Solution s = make_solution({1, 1, 2});
  CHECK(s.target == 4);
  CHECK_THROWS_AS(make_solution({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_solution({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_solution({}), std::invalid_argument);
}

TEST_CASE("infinite instances") {
  CHECK(is_infinite_instance({3, 2}));
  CHECK_FALSE(is_infinite_instance({12, 4}));
  for (int r = 2; r <= 8; ++r) CHECK_FALSE(is_infinite_instance({r, r}));
}

TEST_CASE("infinity pattern agrees with both value tables") {
  for (int table : {1, 2}) {
    for (const auto& cell : known_cells(table)) {
      const bool expect_inf = cell.expected.kind == ExpKind::Infinite;
      CHECK(is_infinite_instance({cell.k, cell.r}) == expect_inf);
    }
  }
}

TEST_CASE("color_sum examples") {
  const Coloring zeros = Coloring::uniform(4, 0);
  CHECK(color_sum(make_solution({1, 1, 2}), zeros, 4) == 0);

  const Coloring chi(std::vector<uint8_t>{0, 1, 1, 0});
  CHECK(color_sum(make_solution({1, 3}), chi, 3) == 1);

  // monochromatic with r | k forces zero
  for (auto [k, r] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{4, 4}, std::pair{6, 2}}) {
    for (int c = 0; c < r; ++c) {
      const Coloring mono = Coloring::uniform(2 * k, static_cast<uint8_t>(c));
      const Solution ones = make_solution(std::vector<int>(static_cast<size_t>(k) - 1, 1));
      CHECK(color_sum(ones, mono, r) == 0);
    }
  }
}

TEST_CASE("color_sum domain errors") {
  const Coloring chi = Coloring::uniform(3, 0);
  CHECK_THROWS_AS(color_sum(make_solution({1, 3}), chi, 2), std::domain_error);  // target 4
  CHECK_THROWS_AS(color_sum(Solution{{5}, 3}, chi, 2), std::domain_error);       // bad part
}

TEST_CASE("is_zero_sum examples") {
  const Coloring mono = Coloring::uniform(10, 1);
  CHECK(is_zero_sum(make_solution({1, 1, 1}), mono, 2));  // k=4, r=2, r | k

  const Coloring chi(std::vector<uint8_t>{0, 1, 1, 0});
  CHECK_FALSE(is_zero_sum(make_solution({1, 3}), chi, 3));

  const Coloring chi2(std::vector<uint8_t>{0, 1, 1, 2});
  CHECK_FALSE(is_zero_sum(make_solution({1, 1, 2}), chi2, 4));
}

TEST_CASE("color_sum below r and zero-sum iff zero") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 4);
    const int n = 6 + static_cast<int>(rng() % 10);
    std::vector<uint8_t> colors(static_cast<size_t>(n));
    for (auto& c : colors) c = static_cast<uint8_t>(rng() % r);
    const Coloring chi(colors);

    std::vector<int> parts;
    int remaining = n;
    const int nparts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nparts; ++i) parts.push_back(1 + static_cast<int>(rng() % 2));
    std::sort(parts.begin(), parts.end());
    Solution sol = make_solution(parts);
    if (sol.target > n) continue;
    (void)remaining;

    const int cs = color_sum(sol, chi, r);
    CHECK(cs >= 0);
    CHECK(cs < r);
    CHECK(is_zero_sum(sol, chi, r) == (cs == 0));
  }
}

TEST_CASE("monochromatic solutions are zero-sum when r divides k") {
  std::mt19937 rng(7);
  for (auto [k, r] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{4, 4}, std::pair{6, 2}}) {
    const int n = 14;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<uint8_t> colors(static_cast<size_t>(n));
      for (auto& c : colors) c = static_cast<uint8_t>(rng() % r);
      const Coloring chi(colors);
      for (int t = k - 1; t <= n; ++t) {
        for (const auto& sol : collect_solutions(t, k)) {
          bool mono = true;
          for (int part : sol.parts) mono = mono && chi.color(part) == chi.color(t);
          if (mono) CHECK(is_zero_sum(sol, chi, r));
        }
      }
    }
  }
}

TEST_SUITE_END();
