#include "catsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace catsim {

void fill_gaussian(SplitMix64& g, std::span<double> out) {
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; i += 2) {
    const double u1 = g.next_unit();
    const double u2 = g.next_unit();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1]
    const double theta = 2.0 * std::numbers::pi * u2;
    out[i] = r * std::cos(theta);
    if (i + 1 < n) out[i + 1] = r * std::sin(theta);
  }
}

double next_exponential(SplitMix64& g) { return -std::log1p(-g.next_unit()); }

}  // namespace catsim
