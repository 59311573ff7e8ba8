#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "catsim/grid.hpp"
#include "catsim/strategy.hpp"

namespace catsim {

// Fixed vertex convention of the ternary plot, in y-up math coordinates:
// q0 apex on top at (0.5, sqrt(3)/2), q1 bottom-left (0,0), q2 bottom-right
// (1,0); a point renders at q1*V1 + q2*V2 + q0*V0.
std::array<double, 2> barycentric_to_xy(const FrequencyTriple& q);

struct FigureOptions {
  std::string title;
  bool electoral_labels = false;  // label the corners as candidates, not foods
  int size = 640;                 // canvas width in px
};

// Ternary panel: optional shaded cell mask (one polygon per set cell) plus
// one circle element per scatter point. Always emits valid SVG 1.1, including
// for an empty point set.
void write_figure_svg(std::ostream& os, const TriangleGrid* grid,
                      const std::vector<std::uint8_t>* cells,
                      const std::vector<FrequencyTriple>& points,
                      const FigureOptions& opt);

}  // namespace catsim
