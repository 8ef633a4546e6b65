#include "zschur/zero_sum.hpp"

#include <stdexcept>

#include "zschur/enumerate.hpp"

namespace zschur {

namespace {

// Streaming probe over the same recursion as enumerate_solutions, carrying
// the running color sum.  Fills parts (ascending slot order) on success.
bool probe(const uint8_t* chi1, int r, int remaining, int slots, int bound, int csum,
           int32_t* parts) {
  if (remaining <= 0) return false;
  if (slots == 1) {
    if ((csum + chi1[remaining]) % r == 0) {
      parts[0] = remaining;
      return true;
    }
    return false;
  }
  const int lo = (remaining + slots - 1) / slots;
  for (int i = bound; i >= lo; --i) {
    parts[slots - 1] = i;
    if (probe(chi1, r, remaining - i, slots - 1, i, csum + chi1[i], parts)) return true;
  }
  return false;
}

std::optional<Solution> probe_target(const uint8_t* chi1, int target, const Params& p) {
  if (target < p.k - 1) return std::nullopt;
  std::vector<int32_t> parts(static_cast<size_t>(p.k) - 1);
  if (!probe(chi1, p.r, target, p.k - 1, target, chi1[target], parts.data()))
    return std::nullopt;
  return Solution{std::vector<int>(parts.begin(), parts.end()), target};
}

std::vector<uint8_t> one_based(const Coloring& chi) {
  std::vector<uint8_t> buf(static_cast<size_t>(chi.length()) + 1, 0);
  const auto& c = chi.colors();
  for (size_t i = 0; i < c.size(); ++i) buf[i + 1] = c[i];
  return buf;
}

// Residues reachable as a sum of k-1 colors drawn (with repetition) from
// the set of colors present on [1, limit].  Overapproximates, so it can
// only skip targets that genuinely have no zero-sum solution.
uint32_t reachable_part_sums(const uint8_t* chi1, int limit, int k, int r) {
  uint32_t present = 0;
  for (int i = 1; i <= limit; ++i) present |= 1u << (chi1[i] % r);
  uint32_t reach = present;
  for (int step = 2; step < k; ++step) {
    uint32_t next = 0;
    for (int a = 0; a < r; ++a) {
      if (!(reach >> a & 1)) continue;
      for (int b = 0; b < r; ++b)
        if (present >> b & 1) next |= 1u << ((a + b) % r);
    }
    reach = next;
  }
  return reach;
}

}  // namespace

std::optional<Solution> find_zero_sum_ending_at(const Coloring& chi, int n, const Params& p) {
  p.validate();
  if (n < 1 || n > chi.length())
    throw std::domain_error("position outside the colored interval");
  if (n < p.k - 1) return std::nullopt;
  auto buf = one_based(chi);
  return probe_target(buf.data(), n, p);
}

std::optional<Solution> find_any_zero_sum(const Coloring& chi, const Params& p,
                                          bool prefilter) {
  p.validate();
  auto buf = one_based(chi);
  const int n = chi.length();
  for (int t = p.k - 1; t <= n; ++t) {
    if (prefilter) {
      // every part of a solution with target t is at most t - (k-2)
      uint32_t reach = reachable_part_sums(buf.data(), t - (p.k - 2), p.k, p.r);
      int need = (p.r - buf[t] % p.r) % p.r;
      if (!(reach >> need & 1)) continue;
    }
    if (auto hit = probe_target(buf.data(), t, p)) return hit;
  }
  return std::nullopt;
}

SolutionTable::SolutionTable(int k) : k_(k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  flat_.resize(1);  // target 0 unused
}

void SolutionTable::ensure(int max_target) {
  while (static_cast<int>(flat_.size()) <= max_target) {
    const int t = static_cast<int>(flat_.size());
    std::vector<int32_t> flat;
    enumerate_solutions(t, k_, [&](const std::vector<int>& parts, int) {
      flat.insert(flat.end(), parts.begin(), parts.end());
      return true;
    });
    flat.shrink_to_fit();
    flat_.push_back(std::move(flat));
  }
}

int SolutionTable::find_zero_sum(const uint8_t* chi1, int target, int r) const {
  const auto& flat = flat_[static_cast<size_t>(target)];
  const int km1 = k_ - 1;
  const int32_t* parts = flat.data();
  const size_t nsol = flat.size() / static_cast<size_t>(km1);
  const int tcolor = chi1[target];
  for (size_t s = 0; s < nsol; ++s, parts += km1) {
    int sum = tcolor;
    for (int i = 0; i < km1; ++i) sum += chi1[parts[i]];
    if (sum % r == 0) return static_cast<int>(s);
  }
  return -1;
}

long long SolutionTable::solution_count(int target) const {
  return static_cast<long long>(flat_[static_cast<size_t>(target)].size() / (k_ - 1));
}

Solution SolutionTable::solution_at(int target, int index) const {
  const auto& flat = flat_[static_cast<size_t>(target)];
  const int km1 = k_ - 1;
  auto begin = flat.begin() + static_cast<long>(index) * km1;
  return Solution{std::vector<int>(begin, begin + km1), target};
}

}  // namespace zschur
