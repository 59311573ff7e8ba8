#include "catsim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catsim {

std::size_t TriangleGrid::index_of(const Cell& c) const {
  const int row = c.up ? c.a + c.b : c.a + c.b + 1;
  return static_cast<std::size_t>(row) * row + 2 * c.a + (c.up ? 0 : 1);
}

TriangleGrid::Cell TriangleGrid::cell_at(std::size_t index) const {
  int row = static_cast<int>(std::sqrt(static_cast<double>(index)));
  while (static_cast<std::size_t>(row) * row > index) --row;
  while (static_cast<std::size_t>(row + 1) * (row + 1) <= index) ++row;
  const int within = static_cast<int>(index) - row * row;
  Cell c;
  c.up = (within % 2) == 0;
  c.a = within / 2;
  c.b = c.up ? row - c.a : row - 1 - c.a;
  return c;
}

bool TriangleGrid::cell_valid(const Cell& c) const {
  if (c.a < 0 || c.b < 0) return false;
  return c.up ? c.a + c.b <= r_ - 1 : c.a + c.b <= r_ - 2;
}

FrequencyTriple TriangleGrid::centroid(std::size_t index) const {
  const Cell c = cell_at(index);
  const double off = c.up ? 1.0 / 3.0 : 2.0 / 3.0;
  const double u = c.a + off;
  const double v = c.b + off;
  const double q1 = u / r_;
  const double q2 = v / r_;
  return {1.0 - q1 - q2, q1, q2};
}

namespace {

bool contains(const TriangleGrid::Cell& c, double u, double v, double slack) {
  const double du = u - c.a;
  const double dv = v - c.b;
  if (c.up)
    return du >= -slack && dv >= -slack && du + dv <= 1.0 + slack;
  return du <= 1.0 + slack && dv <= 1.0 + slack && du + dv >= 1.0 - slack;
}

}  // namespace

std::size_t TriangleGrid::locate(const FrequencyTriple& q) const {
  const double u = r_ * q.q1;
  const double v = r_ * q.q2;
  const int af = std::clamp(static_cast<int>(std::floor(u)), 0, r_ - 1);
  const int bf = std::clamp(static_cast<int>(std::floor(v)), 0, r_ - 1);

  // A point can lie in up to six closed cells around its lattice square;
  // scan them and keep the lowest index (the documented tie rule).
  const auto scan = [&](double slack) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (int a = af - 1; a <= af; ++a) {
      for (int b = bf - 1; b <= bf; ++b) {
        for (const bool up : {true, false}) {
          const Cell c{up, a, b};
          if (!cell_valid(c) || !contains(c, u, v, slack)) continue;
          best = std::min(best, index_of(c));
        }
      }
    }
    return best;
  };

  std::size_t best = scan(0.0);
  if (best != std::numeric_limits<std::size_t>::max()) return best;
  best = scan(1e-9);
  if (best != std::numeric_limits<std::size_t>::max()) return best;

  // Far outside the simplex; clamp to the nearest valid up cell.
  int a = std::clamp(af, 0, r_ - 1);
  int b = std::clamp(bf, 0, r_ - 1 - a);
  return index_of(Cell{true, a, b});
}

}  // namespace catsim
