#pragma once

#include <cstddef>
#include <cstdint>

#include "catsim/strategy.hpp"

namespace catsim {

// R-fold edge subdivision of the frequency triangle into R^2 congruent cells.
//
// Lattice coordinates u = R q1, v = R q2. The up cell (a,b) is
// {u >= a, v >= b, (u-a)+(v-b) <= 1}; the down cell (a,b) is
// {u <= a+1, v <= b+1, (u-a)+(v-b) >= 1}. Row r counts cells by distance from
// the q0 vertex: up cells have a+b = r, down cells a+b = r-1, rows start at
// index r^2, and within a row the index is 2a (up) or 2a+1 (down).
class TriangleGrid {
 public:
  struct Cell {
    bool up = true;
    int a = 0, b = 0;
  };

  explicit TriangleGrid(int resolution) : r_(resolution) {}

  int resolution() const { return r_; }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(r_) * static_cast<std::size_t>(r_);
  }

  std::size_t index_of(const Cell& c) const;
  Cell cell_at(std::size_t index) const;

  FrequencyTriple centroid(std::size_t index) const;

  // Containing cell of a barycentric point. Points on shared edges or corners
  // belong to several closed cells; the lowest index wins.
  std::size_t locate(const FrequencyTriple& q) const;

 private:
  bool cell_valid(const Cell& c) const;
  int r_;
};

}  // namespace catsim
