#include "zschur/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zschur/zero_sum.hpp"

namespace zschur {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<uint8_t> units_mod(int r) {
  std::vector<uint8_t> units;
  for (int u = 1; u < r; ++u)
    if (std::gcd(u, r) == 1) units.push_back(static_cast<uint8_t>(u));
  return units;
}

// State shared by all workers of one search: a set-once stop flag, the
// first witness reported, and commutative statistics.
struct Shared {
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<long long> nodes{0};
  std::mutex mu;
  bool found = false;
  std::vector<uint8_t> witness;  // colors of [1,n], 0-based storage
  Clock::time_point deadline{};
  bool has_deadline = false;
};

// One depth-first walker with a private coloring buffer and symmetry stack.
struct Walker {
  int k = 0, r = 0, n = 0, ncolors = 0;
  bool sym = false;
  bool binary = false;
  const SolutionTable* table = nullptr;
  std::vector<uint8_t> hint;  // hint[m] preferred at position m, 1-based
  int hint_len = 0;
  Shared* shared = nullptr;

  std::vector<uint8_t> chi;  // 1-based colors
  std::vector<uint32_t> seen_stack;
  std::vector<std::vector<uint8_t>> group_stack;
  std::vector<uint8_t> frame_at;  // frame_at[m]: position m pushed a symmetry frame
  long long nodes = 0;
  bool halted = false;

  // frontier collection: record viable prefixes of this depth instead of
  // descending past it (0 = full search)
  int frontier_depth = 0;
  std::vector<std::vector<uint8_t>>* frontier = nullptr;

  void init(const Params& p, int length, bool symmetry, const SolutionTable& tab,
            Shared& sh, const Coloring* hint_coloring) {
    k = p.k;
    r = p.r;
    n = length;
    ncolors = p.color_count();
    binary = p.palette == Palette::Binary;
    sym = symmetry && p.k % p.r == 0;
    table = &tab;
    shared = &sh;
    chi.assign(static_cast<size_t>(n) + 1, 0);
    frame_at.assign(static_cast<size_t>(n) + 1, 0);
    if (hint_coloring && hint_coloring->length() > 0) {
      hint_len = hint_coloring->length();
      hint.assign(static_cast<size_t>(hint_len) + 1, 0);
      const auto& src = hint_coloring->colors();
      for (int i = 0; i < hint_len; ++i) hint[static_cast<size_t>(i) + 1] = src[i];
    }
    reset_symmetry();
  }

  void reset_symmetry() {
    seen_stack.assign(1, 0u);
    group_stack.assign(1, units_mod(r));
    std::fill(frame_at.begin(), frame_at.end(), uint8_t{0});
  }

  bool allowed(int m, int c) const {
    if (!sym) return true;
    if (m == 1) return c == 0;  // translation resp. complement pins chi(1)
    if (seen_stack.back() >> c & 1) return true;
    if (binary) return true;  // complement freedom spent on chi(1) = 0
    // a first-seen color must be minimal in its orbit under the residual units
    for (uint8_t u : group_stack.back())
      if (u * c % r < c) return false;
    return true;
  }

  void push_frame(int m, int c) {
    if (!sym) return;
    const uint32_t seen = seen_stack.back();
    if (seen >> c & 1) {
      frame_at[static_cast<size_t>(m)] = 0;
      return;
    }
    std::vector<uint8_t> stab;
    for (uint8_t u : group_stack.back())
      if (u * c % r == c) stab.push_back(u);
    seen_stack.push_back(seen | 1u << c);
    group_stack.push_back(std::move(stab));
    frame_at[static_cast<size_t>(m)] = 1;
  }

  void pop_frame(int m) {
    if (sym && frame_at[static_cast<size_t>(m)]) {
      seen_stack.pop_back();
      group_stack.pop_back();
      frame_at[static_cast<size_t>(m)] = 0;
    }
  }

  void replay_prefix(const std::vector<uint8_t>& prefix) {
    reset_symmetry();
    for (size_t i = 0; i < prefix.size(); ++i) {
      chi[i + 1] = prefix[i];
      push_frame(static_cast<int>(i) + 1, prefix[i]);
    }
  }

  void poll() {
    if (shared->stop.load(std::memory_order_relaxed)) {
      halted = true;
      return;
    }
    if (shared->has_deadline && Clock::now() >= shared->deadline) {
      shared->timed_out.store(true);
      shared->stop.store(true);
      halted = true;
    }
  }

  // true when a complete avoiding coloring fills chi[1..n]
  bool dfs(int m) {
    if (frontier_depth != 0 && m > frontier_depth) {
      frontier->emplace_back(chi.begin() + 1, chi.begin() + 1 + frontier_depth);
      return false;
    }
    int first = -1;
    if (m <= hint_len && hint[static_cast<size_t>(m)] < ncolors)
      first = hint[static_cast<size_t>(m)];
    for (int idx = first >= 0 ? -1 : 0; idx < ncolors; ++idx) {
      const int c = idx < 0 ? first : idx;
      if (idx >= 0 && c == first) continue;
      if (!allowed(m, c)) continue;
      if ((++nodes & 8191) == 0) poll();
      if (halted) return false;
      chi[static_cast<size_t>(m)] = static_cast<uint8_t>(c);
      if (table->find_zero_sum(chi.data(), m, r) < 0) {
        push_frame(m, c);
        if (m == n && frontier_depth == 0) return true;
        if (dfs(m + 1)) return true;
        pop_frame(m);
      }
    }
    return false;
  }
};

AvoidResult run_sequential(int n, const Params& p, const SearchLimits& lim,
                           const SolutionTable& tab, const Coloring* hint, Shared& shared) {
  Walker w;
  w.init(p, n, lim.symmetry_reduction, tab, shared, hint);
  const bool ok = w.dfs(1);
  shared.nodes += w.nodes;
  if (ok) return {AvoidKind::Found, Coloring({w.chi.begin() + 1, w.chi.end()})};
  if (shared.timed_out.load()) return {AvoidKind::Timeout, {}};
  return {AvoidKind::Exhausted, {}};
}

AvoidResult run_parallel(int n, const Params& p, const SearchLimits& lim,
                         const SolutionTable& tab, const Coloring* hint, Shared& shared) {
  const int depth = std::min(lim.split_depth, n - 1);

  std::vector<std::vector<uint8_t>> prefixes;
  {
    Walker collector;
    collector.init(p, n, lim.symmetry_reduction, tab, shared, hint);
    collector.frontier_depth = depth;
    collector.frontier = &prefixes;
    collector.dfs(1);
    shared.nodes += collector.nodes;
    if (collector.halted && shared.timed_out.load()) return {AvoidKind::Timeout, {}};
  }
  if (prefixes.empty()) return {AvoidKind::Exhausted, {}};

  std::atomic<size_t> next{0};
  auto work = [&] {
    Walker w;
    w.init(p, n, lim.symmetry_reduction, tab, shared, hint);
    for (;;) {
      if (shared.stop.load(std::memory_order_relaxed)) break;
      const size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) break;
      w.halted = false;
      w.replay_prefix(prefixes[i]);
      if (w.dfs(depth + 1)) {
        std::lock_guard<std::mutex> lock(shared.mu);
        if (!shared.found) {
          shared.found = true;
          shared.witness.assign(w.chi.begin() + 1, w.chi.end());
        }
        shared.stop.store(true);
        break;
      }
      if (w.halted) break;
    }
    shared.nodes += w.nodes;
  };

  std::vector<std::thread> pool;
  const size_t nthreads =
      std::min<size_t>(static_cast<size_t>(lim.worker_count), prefixes.size());
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  if (shared.found) return {AvoidKind::Found, Coloring(shared.witness)};
  if (shared.timed_out.load()) return {AvoidKind::Timeout, {}};
  return {AvoidKind::Exhausted, {}};
}

AvoidResult run_search(int n, const Params& p, const SearchLimits& lim,
                       const SolutionTable& tab, const Coloring* hint, Shared& shared) {
  if (lim.worker_count > 1 && n > lim.split_depth + 1)
    return run_parallel(n, p, lim, tab, hint, shared);
  return run_sequential(n, p, lim, tab, hint, shared);
}

void validate_limits(const SearchLimits& lim) {
  if (lim.worker_count < 1) throw std::invalid_argument("worker_count must be at least 1");
  if (lim.split_depth < 1) throw std::invalid_argument("split_depth must be at least 1");
}

}  // namespace

AvoidResult exists_avoiding_coloring(int n, const Params& p, const SearchLimits& limits,
                                     SearchStats* stats, const Coloring* hint) {
  p.validate();
  validate_limits(limits);
  if (n < 1) throw std::invalid_argument("interval length must be at least 1");

  const auto t0 = Clock::now();
  SolutionTable tab(p.k);
  tab.ensure(n);

  Shared shared;
  if (limits.time_budget.count() > 0) {
    shared.deadline = t0 + limits.time_budget;
    shared.has_deadline = true;
  }
  AvoidResult res = run_search(n, p, limits, tab, hint, shared);
  if (stats) {
    stats->nodes += shared.nodes.load();
    stats->elapsed_ms +=
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  }
  return res;
}

SearchOutcome compute_number(const Params& p, const SearchLimits& limits) {
  p.validate();
  validate_limits(limits);
  if (limits.max_n < p.k - 1) throw std::invalid_argument("max_n must be at least k-1");

  const auto t0 = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  };

  SearchOutcome out;
  if (is_infinite_instance(p)) {
    out.status = Status::Infinite;
    out.stats.elapsed_ms = elapsed();
    return out;
  }

  Clock::time_point deadline{};
  bool has_deadline = false;
  if (limits.time_budget.count() > 0) {
    deadline = t0 + limits.time_budget;
    has_deadline = true;
  }

  SolutionTable tab(p.k);
  // every coloring of [1, k-2] avoids: no solution fits below target k-1
  Coloring last = Coloring::uniform(std::max(p.k - 2, 0), 0);
  long long nodes = 0;

  for (int n = p.k - 1; n <= limits.max_n; ++n) {
    tab.ensure(n);
    Shared shared;
    shared.deadline = deadline;
    shared.has_deadline = has_deadline;
    AvoidResult res = run_search(n, p, limits, tab, &last, shared);
    nodes += shared.nodes.load();
    if (res.kind == AvoidKind::Found) {
      last = std::move(res.witness);
      continue;
    }
    out.stats.nodes = nodes;
    out.stats.elapsed_ms = elapsed();
    out.witness = std::move(last);
    if (res.kind == AvoidKind::Exhausted) {
      out.status = Status::Finite;
      out.value = n;
    } else {
      out.status = Status::Unresolved;
      out.lower_bound = out.witness.length();
    }
    return out;
  }

  out.status = Status::Unresolved;
  out.lower_bound = last.length();
  out.witness = std::move(last);
  out.stats.nodes = nodes;
  out.stats.elapsed_ms = elapsed();
  return out;
}

Coloring normalize_coloring(const Coloring& chi, const Params& p) {
  p.validate();
  if (p.k % p.r != 0)
    throw std::domain_error("orbit normalization requires r | k");
  const int limit = p.color_count();
  for (uint8_t c : chi.colors())
    if (c >= limit) throw std::invalid_argument("color outside the palette");

  const auto& src = chi.colors();
  const size_t n = src.size();
  if (p.palette == Palette::Binary) {
    std::vector<uint8_t> comp(n);
    for (size_t i = 0; i < n; ++i) comp[i] = static_cast<uint8_t>(1 - src[i]);
    Coloring flipped(std::move(comp));
    return std::min(chi, flipped);
  }

  Coloring best = chi;
  std::vector<uint8_t> img(n);
  for (uint8_t u : units_mod(p.r)) {
    for (int c = 0; c < p.r; ++c) {
      for (size_t i = 0; i < n; ++i)
        img[i] = static_cast<uint8_t>((u * src[i] + c) % p.r);
      Coloring candidate(img);
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace zschur
