#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "catsim/feasibility.hpp"
#include "catsim/grid.hpp"
#include "catsim/sampling.hpp"

namespace catsim {

enum class CoverageMethod { Empirical, Oracle };

std::string_view method_name(CoverageMethod m);

struct CoverageReport {
  Model model = Model::Classical;
  ClassFilter cls = ClassFilter::All;
  int resolution = 0;
  CoverageMethod method = CoverageMethod::Oracle;
  std::size_t covered_cells = 0;
  double fraction = 0.0;
  std::size_t sample_count = 0;  // empirical only
  std::uint64_t seed = 0;        // empirical only
};

// Cell mask of surviving images: strategies of the requested class whose
// optimal frequencies exist, binned by locate(). Parallel with per-thread
// masks merged by OR; the serial twin is the test reference.
std::vector<std::uint8_t> hit_cells(const std::vector<MappedPoint>& pts,
                                    const TriangleGrid& grid, ClassFilter f);
std::vector<std::uint8_t> hit_cells_serial(const std::vector<MappedPoint>& pts,
                                           const TriangleGrid& grid, ClassFilter f);

// Per-cell survivor counts (same filtering as hit_cells).
std::vector<std::uint32_t> cell_hit_counts(const std::vector<MappedPoint>& pts,
                                           const TriangleGrid& grid, ClassFilter f);

CoverageReport empirical_coverage(const SampleBatch& batch, const TriangleGrid& grid,
                                  ClassFilter f, std::uint64_t seed);
CoverageReport empirical_coverage_serial(const SampleBatch& batch, const TriangleGrid& grid,
                                         ClassFilter f, std::uint64_t seed);

// Feasibility of every cell centroid. Deterministic; no sampling noise.
std::vector<std::uint8_t> oracle_feasible_cells(const TriangleGrid& grid, Model m,
                                                ClassFilter f);
std::vector<std::uint8_t> oracle_feasible_cells_serial(const TriangleGrid& grid, Model m,
                                                       ClassFilter f);

CoverageReport oracle_coverage(const TriangleGrid& grid, Model m, ClassFilter f);
CoverageReport oracle_coverage_serial(const TriangleGrid& grid, Model m, ClassFilter f);

// Reference percentages reported by the source analysis (rows: classical and
// prequantization, quantization; columns: all, intransitive, transitive).
inline constexpr std::array<double, 3> kReferenceClassicalRow{0.67, 0.44, 0.67};
inline constexpr std::array<double, 3> kReferenceQuantRow{0.60, 0.44, 0.37};

struct Table2 {
  int oracle_resolution = 0;
  int empirical_resolution = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::array<double, 3> oracle_classical{};   // shared by the prequant model
  std::array<double, 3> oracle_quant{};
  std::array<double, 3> empirical_classical{};
  std::array<double, 3> empirical_prequant{};
  std::array<double, 3> empirical_quant{};
  double classical_prequant_delta = 0.0;  // max abs across the three columns
};

Table2 table2_report(int oracle_resolution, int empirical_resolution, std::size_t samples,
                     std::uint64_t seed);

}  // namespace catsim
