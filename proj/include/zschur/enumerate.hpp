// Streaming enumeration of all solutions to x_1 + ... + x_{k-1} = t with
// nondecreasing positive parts.  Recursive slot filling from the largest
// slot down: slot n gets a value i in [ceil(t/n), bound], where bound is
// the value placed in slot n+1 (initially t itself).  Memory stays O(k)
// and consumers may stop the stream early.
#pragma once

#include <functional>

#include "zschur/core.hpp"

namespace zschur {

// Receives the parts buffer (nondecreasing, sums to target) for each
// solution; return false to stop the stream.
using SolutionVisitor = std::function<bool(const std::vector<int>& parts, int target)>;

// Emits every nondecreasing (k-1)-tuple of positive integers summing to
// target, each exactly once.  Tuples arrive in decreasing lexicographic
// order of the reversed tuple (largest slot explored from its upper bound
// downward).  Returns false iff the visitor stopped the stream.
bool enumerate_solutions(int target, int k, const SolutionVisitor& visit);

std::vector<Solution> collect_solutions(int target, int k);

// Stream length of enumerate_solutions; counts by running the enumeration.
long long count_solutions(int target, int k);

}  // namespace zschur
