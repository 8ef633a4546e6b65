// Domain types and elementary predicates for zero-sum generalized Schur
// computations.
//
// Equation E is x_1 + ... + x_{k-1} = x_k over positive integers, with the
// parts kept nondecreasing.  A coloring chi of [1,n] with colors
// {0,...,r-1} makes a solution r-zero-sum when the colors of all k entries
// (the k-1 parts plus the target) sum to 0 mod r.  S3(k;r) is the least n
// such that every r-coloring of [1,n] admits an r-zero-sum solution to E;
// S32(k;r) is the same with colorings restricted to the two colors {0,1},
// sums still taken mod r.  Both are finite exactly when r | k: otherwise
// coloring every integer with color 1 avoids zero-sum solutions forever.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zschur {

inline constexpr const char* kEngineVersion = "0.1.0";

enum class Palette { Full, Binary };

struct Params {
  int k = 2;  // number of terms in E (k-1 parts plus the target)
  int r = 2;  // number of colors and the zero-sum modulus
  Palette palette = Palette::Full;

  // throws std::invalid_argument unless k >= 2 and 2 <= r <= 255
  void validate() const;
  int color_count() const { return palette == Palette::Binary ? 2 : r; }
};

// A solution to E: nondecreasing positive parts plus their exact sum.
struct Solution {
  std::vector<int> parts;
  int target = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Validates parts (nondecreasing, each >= 1) and fills in the target.
Solution make_solution(std::vector<int> parts);

// Color assignment on [1,n]; color(i) = chi(i), entries in 0..r-1.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<uint8_t> colors) : colors_(std::move(colors)) {}

  static Coloring uniform(int n, uint8_t color) {
    return Coloring(std::vector<uint8_t>(static_cast<size_t>(n), color));
  }

  int length() const { return static_cast<int>(colors_.size()); }
  int color(int pos) const { return colors_.at(static_cast<size_t>(pos) - 1); }
  const std::vector<uint8_t>& colors() const { return colors_; }

  // largest color value present, -1 when empty
  int max_color() const;

  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<uint8_t> colors_;
};

struct SearchStats {
  long long nodes = 0;
  long long elapsed_ms = 0;
};

enum class Status { Finite, Infinite, Unresolved };

struct SearchOutcome {
  Status status = Status::Unresolved;
  long long value = 0;        // Finite: the number itself
  long long lower_bound = 0;  // Unresolved: largest n with a verified avoiding coloring
  Coloring witness;           // avoiding coloring of [1,value-1] resp. [1,lower_bound]
  SearchStats stats;
};

struct VerificationReport {
  std::string family;
  int k = 0;
  int length = 0;  // interval covered by the built coloring
  long long claimed_bound = 0;
  bool avoids = false;
  std::optional<Solution> counterexample;
  int counterexample_color_sum = 0;
};

// true iff r does not divide k, in which case S3 = S32 = infinity
bool is_infinite_instance(const Params& p);

// (sum of chi over the parts + chi(target)) mod r; throws std::domain_error
// when a part or the target lies outside [1, chi.length()]
int color_sum(const Solution& sol, const Coloring& chi, int r);

bool is_zero_sum(const Solution& sol, const Coloring& chi, int r);

}  // namespace zschur
