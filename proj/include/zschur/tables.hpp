// Cell-by-cell reproduction of the known values of S3(k;r) and S32(k;r)
// for k in 2..12 and r in 2..5, with tiering by expected cost and a result
// cache keyed by engine version.
#pragma once

#include <optional>

#include "zschur/core.hpp"
#include "zschur/search.hpp"

namespace zschur {

enum class ExpKind { Finite, Infinite, LowerBoundOnly };

struct Expectation {
  ExpKind kind = ExpKind::Infinite;
  long long value = 0;  // Finite value, or the published lower bound
};

// A = seconds, B = minutes, C = opt-in (possibly hours), D = out of reach
enum class Tier { A, B, C, D };

struct KnownCell {
  int table = 0;  // 1 = full palette, 2 = binary palette
  int k = 0;
  int r = 0;
  Expectation expected;
  Tier tier = Tier::A;
  const char* note = "";
};

// All 44 printed cells of the given table, in (k, r) order.
const std::vector<KnownCell>& known_cells(int table);
Palette table_palette(int table);

enum class Verdict { Match, Mismatch, SkippedBudget, ConsistentLowerBound };

struct CellResult {
  int table = 0;
  int k = 0;
  int r = 0;
  Palette palette = Palette::Full;
  Expectation expected;
  SearchOutcome computed;
  Verdict verdict = Verdict::SkippedBudget;
  bool new_result = false;  // outran the published lower bound; never a failure
  bool from_cache = false;
  double elapsed_s = 0.0;
};

// Verdict rules: Infinite cells must come back Infinite; Finite cells match
// on equality and become SkippedBudget when the engine ran out of budget; a
// lower-bound-only cell is ConsistentLowerBound unless the engine claims a
// finite value below the published bound, which contradicts a known
// avoiding coloring and is graded Mismatch.
Verdict judge_cell(const Expectation& expected, const SearchOutcome& computed,
                   bool* new_result = nullptr);

struct CellFilter {
  bool tier_a = true;
  bool tier_b = true;
  bool tier_c = false;
  bool tier_d = false;
  std::optional<std::vector<std::pair<int, int>>> cells;  // explicit (k, r) subset

  bool selects(const KnownCell& cell) const;
};

// Runs compute_number per selected cell, in (k, r) order.  cache_path, when
// given, is read for previous results (same engine version only) and
// rewritten with the merged results afterwards.
std::vector<CellResult> reproduce_table(int table, const CellFilter& filter,
                                        const SearchLimits& per_cell_limits,
                                        const std::string& cache_path = "");

// JSON persistence; load throws std::runtime_error with the byte offset on
// malformed input and never returns partial data.
void save_results(const std::vector<CellResult>& results, const std::string& path);
std::vector<CellResult> load_results(const std::string& path);

// Text grid mirroring the printed tables, one row per k, one column per r.
std::string render_grid(int table, const std::vector<CellResult>& results);

}  // namespace zschur
