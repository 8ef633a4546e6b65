// Explicit lower-bound colorings, built as block-run data and certified by
// exhaustive zero-sum search rather than by case analysis.
//
// Families (length = claimed bound - 1 in every case):
//   p3     k even, k >= 4, r = 2:      0^{k-2} 1^{k-2}            bound 2k-3
//   t4     3 | k,  r = 3:  (012)^{k/3-1} (011)^{k/3} (021)^{k/3-1} 02,
//                                                                 bound 3k-3
//   t5     3 | k,  r = 3, binary:      0^{k-2} 1^{2k-4}           bound 3k-5
//   t6     4 | k,  r = 4:  (0123)^{k/4-1} (0120) (0220)^{k/2-1} (3210)^{k/4-1} 32,
//                                                                 bound 4k-5
//   p7     k odd, k >= 3, r = k:  (01)^{k-2} (0[k-1])^{(k-1)(k-2)} (01)^{k-2} 0,
//                                                                 bound 2(k^2-k-1)
//   s32kk  k >= 3, r = k, binary:      0^{k-2} 1^{(k-2)(k-1)} 0^{k-2},
//                                                                 bound k^2-k-1
#pragma once

#include <span>

#include "zschur/core.hpp"
#include "zschur/search.hpp"

namespace zschur {

enum class Family { P3, T4, T5, T6, P7, S32KK };

// A witness coloring as data: pattern blocks with repeat counts.
struct Run {
  std::vector<uint8_t> pattern;
  int repeat = 1;
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws on unknown names

bool family_applicable(Family f, int k);
void require_applicable(Family f, int k);  // throws std::domain_error naming the condition

Params family_params(Family f, int k);
long long family_length(Family f, int k);
long long family_bound(Family f, int k);
std::vector<Run> family_runs(Family f, int k);

// Expands the family's block runs; length always equals bound - 1.
Coloring build_witness(Family f, int k);

// Runs the zero-sum scan over the built coloring.  avoids == true certifies
// the family's bound; a counterexample would falsify the build or the engine.
VerificationReport verify_witness(Family f, int k);

// Solution count at the witness's top target (the costliest single
// position), from the partition-count recurrence.  Used only to budget
// sweeps; the enumerator itself never counts this way.
double top_target_solution_estimate(Family f, int k);

enum class Question { Q1, Q2, Q4 };

struct ConjectureRow {
  int k = 0;
  SearchOutcome computed;
  long long conjectured = 0;  // 3k-3 / 4k-5 / k^2
  bool consistent = false;    // exact match (Q1, Q2); resolved at all (Q4)
  double ratio = 0.0;         // Q4: computed value / k^2
};

struct ConjectureReport {
  Question question;
  std::vector<ConjectureRow> rows;
};

// Tabulates computed values against the conjectured formulas.  Gathers
// evidence only; unresolved cells are reported as such and never graded.
ConjectureReport conjecture_evidence(Question q, std::span<const int> ks,
                                     const SearchLimits& limits);

}  // namespace zschur
