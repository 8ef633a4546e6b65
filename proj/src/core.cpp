#include "zschur/core.hpp"

#include <numeric>
#include <stdexcept>

namespace zschur {

void Params::validate() const {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (r > 255) throw std::invalid_argument("r must fit in a byte");
}

Solution make_solution(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("solution needs at least one part");
  int prev = 0;
  long long sum = 0;
  for (int x : parts) {
    if (x < 1) throw std::invalid_argument("solution parts must be positive");
    if (x < prev) throw std::invalid_argument("solution parts must be nondecreasing");
    prev = x;
    sum += x;
  }
  if (sum > INT32_MAX) throw std::invalid_argument("solution target overflows");
  return Solution{std::move(parts), static_cast<int>(sum)};
}

int Coloring::max_color() const {
  int best = -1;
  for (uint8_t c : colors_)
    if (c > best) best = c;
  return best;
}

bool is_infinite_instance(const Params& p) {
  p.validate();
  return p.k % p.r != 0;
}

int color_sum(const Solution& sol, const Coloring& chi, int r) {
  if (r < 2) throw std::invalid_argument("modulus must be at least 2");
  const int n = chi.length();
  if (sol.target < 1 || sol.target > n)
    throw std::domain_error("solution target outside the colored interval");
  long long sum = chi.colors()[static_cast<size_t>(sol.target) - 1];
  for (int x : sol.parts) {
    if (x < 1 || x > n)
      throw std::domain_error("solution part outside the colored interval");
    sum += chi.colors()[static_cast<size_t>(x) - 1];
  }
  return static_cast<int>(sum % r);
}

bool is_zero_sum(const Solution& sol, const Coloring& chi, int r) {
  return color_sum(sol, chi, r) == 0;
}

}  // namespace zschur
