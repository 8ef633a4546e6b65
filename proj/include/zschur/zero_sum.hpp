// Decides whether a coloring admits an r-zero-sum solution to E.  The
// incremental form checks only solutions whose target is the newest
// position, which is exactly what the backtracking search needs: every
// solution is checked once, when its target gets colored.
#pragma once

#include <cstdint>
#include <optional>

#include "zschur/core.hpp"

namespace zschur {

// First (in enumeration order) zero-sum solution with x_k = n, or nullopt.
// Only positions <= n are inspected.  n < k-1 yields nullopt; n beyond the
// colored interval throws std::domain_error.
std::optional<Solution> find_zero_sum_ending_at(const Coloring& chi, int n, const Params& p);

// Scans targets k-1..length and returns the first zero-sum solution found.
// With prefilter enabled, targets whose color residues are unreachable from
// the colors present below them are skipped; the answer is identical.
std::optional<Solution> find_any_zero_sum(const Coloring& chi, const Params& p,
                                          bool prefilter = false);

// Cached per-target solution lists, shared read-only by search workers.
// Lists follow the enumeration order of enumerate_solutions, so scans give
// the same witness as the streaming path.
class SolutionTable {
 public:
  explicit SolutionTable(int k);

  // builds lists for every target up to max_target (incremental)
  void ensure(int max_target);

  // chi1 is a 1-based color array covering [1, target]; returns the index
  // of the first zero-sum solution, or -1
  int find_zero_sum(const uint8_t* chi1, int target, int r) const;

  long long solution_count(int target) const;
  Solution solution_at(int target, int index) const;
  int k() const { return k_; }

 private:
  int k_;
  std::vector<std::vector<int32_t>> flat_;  // flat_[t]: concatenated (k-1)-part tuples
};

}  // namespace zschur
