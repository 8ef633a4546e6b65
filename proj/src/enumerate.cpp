#include "zschur/enumerate.hpp"

#include <stdexcept>

namespace zschur {

namespace {

// slots >= 1; bound = value in the next-higher slot.  The loop bounds keep
// parts nondecreasing and guarantee 1 <= remaining <= bound at slots == 1.
template <class Emit>
bool emit_rec(int remaining, int slots, int bound, std::vector<int>& parts, Emit&& emit) {
  if (remaining <= 0) return true;  // branch overshot the target, nothing below it
  if (slots == 1) {
    parts[0] = remaining;
    return emit();
  }
  const int lo = (remaining + slots - 1) / slots;  // ceil(remaining / slots)
  for (int i = bound; i >= lo; --i) {
    parts[static_cast<size_t>(slots) - 1] = i;
    if (!emit_rec(remaining - i, slots - 1, i, parts, emit)) return false;
  }
  return true;
}

}  // namespace

bool enumerate_solutions(int target, int k, const SolutionVisitor& visit) {
  if (target < 1) throw std::invalid_argument("target must be at least 1");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  std::vector<int> parts(static_cast<size_t>(k) - 1);
  return emit_rec(target, k - 1, target, parts, [&] { return visit(parts, target); });
}

std::vector<Solution> collect_solutions(int target, int k) {
  std::vector<Solution> out;
  enumerate_solutions(target, k, [&](const std::vector<int>& parts, int t) {
    out.push_back(Solution{parts, t});
    return true;
  });
  return out;
}

long long count_solutions(int target, int k) {
  long long count = 0;
  enumerate_solutions(target, k, [&](const std::vector<int>&, int) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace zschur
