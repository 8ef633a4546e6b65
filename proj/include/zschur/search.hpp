// Backtracking search over colorings of [1,n] and the outer loop computing
// S3(k;r) / S32(k;r).
//
// Colors are assigned to positions 1,2,...,n; assigning position m only
// requires re-checking solutions whose target is m (every solution is
// dominated by its target, so each one is checked exactly once).  When
// r | k the maps chi -> u*chi + c (u a unit mod r) preserve zero-sum-ness,
// since the color sum of a k-term solution picks up exactly k*c; the
// search exploits this by pinning chi(1) = 0 and forcing each first-seen
// color to be minimal in its orbit under the residual unit subgroup.
#pragma once

#include <chrono>

#include "zschur/core.hpp"

namespace zschur {

struct SearchLimits {
  int max_n = 4096;                         // largest interval length to attempt
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
  int worker_count = 1;
  bool symmetry_reduction = true;
  int split_depth = 8;  // parallel mode: subtree roots at this depth
};

enum class AvoidKind { Found, Exhausted, Timeout };

struct AvoidResult {
  AvoidKind kind = AvoidKind::Exhausted;
  Coloring witness;  // filled when kind == Found
};

// Looks for a coloring of [1,n] with no r-zero-sum solution to E.  In
// sequential mode with symmetry reduction off the witness is the
// lexicographically least avoiding coloring.  Timeout means the tree was
// neither exhausted nor a witness found within the budget.
AvoidResult exists_avoiding_coloring(int n, const Params& p, const SearchLimits& limits,
                                     SearchStats* stats = nullptr,
                                     const Coloring* hint = nullptr);

// Infinite when r does not divide k; otherwise scans n upward from k-1
// until some interval admits no avoiding coloring (Finite, witness for
// n-1), or the budget / max_n runs out (Unresolved with the largest
// verified avoiding length and its witness).
SearchOutcome compute_number(const Params& p, const SearchLimits& limits);

// Canonical representative of chi's orbit: lexicographic minimum over all
// affine images u*chi + c (Full palette) or over {chi, 1-chi} (Binary).
// Requires r | k, the condition under which the orbit preserves zero-sum
// solutions; throws std::domain_error otherwise.
Coloring normalize_coloring(const Coloring& chi, const Params& p);

}  // namespace zschur
