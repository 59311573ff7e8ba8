#include "catsim/coverage.hpp"

#include <algorithm>
#include <cmath>

namespace catsim {

std::string_view method_name(CoverageMethod m) {
  return m == CoverageMethod::Empirical ? "empirical" : "oracle";
}

namespace {

bool survives(const MappedPoint& pt, ClassFilter f) {
  return pt.q.has_value() && class_matches(f, pt.cls);
}

CoverageReport report_from_mask(const std::vector<std::uint8_t>& mask,
                                const TriangleGrid& grid) {
  CoverageReport r;
  r.resolution = grid.resolution();
  r.covered_cells = static_cast<std::size_t>(
      std::count(mask.begin(), mask.end(), std::uint8_t{1}));
  r.fraction = static_cast<double>(r.covered_cells) /
               static_cast<double>(grid.cell_count());
  return r;
}

}  // namespace

std::vector<std::uint8_t> hit_cells_serial(const std::vector<MappedPoint>& pts,
                                           const TriangleGrid& grid, ClassFilter f) {
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  for (const MappedPoint& pt : pts)
    if (survives(pt, f)) mask[grid.locate(*pt.q)] = 1;
  return mask;
}

std::vector<std::uint8_t> hit_cells(const std::vector<MappedPoint>& pts,
                                    const TriangleGrid& grid, ClassFilter f) {
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  const long long n = static_cast<long long>(pts.size());
#pragma omp parallel
  {
    std::vector<std::uint8_t> local(mask.size(), 0);
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < n; ++i) {
      const MappedPoint& pt = pts[static_cast<std::size_t>(i)];
      if (survives(pt, f)) local[grid.locate(*pt.q)] = 1;
    }
#pragma omp critical
    for (std::size_t j = 0; j < mask.size(); ++j) mask[j] |= local[j];
  }
  return mask;
}

std::vector<std::uint32_t> cell_hit_counts(const std::vector<MappedPoint>& pts,
                                           const TriangleGrid& grid, ClassFilter f) {
  std::vector<std::uint32_t> counts(grid.cell_count(), 0);
  const long long n = static_cast<long long>(pts.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> local(counts.size(), 0);
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < n; ++i) {
      const MappedPoint& pt = pts[static_cast<std::size_t>(i)];
      if (survives(pt, f)) ++local[grid.locate(*pt.q)];
    }
#pragma omp critical
    for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += local[j];
  }
  return counts;
}

CoverageReport empirical_coverage(const SampleBatch& batch, const TriangleGrid& grid,
                                  ClassFilter f, std::uint64_t seed) {
  CoverageReport r = report_from_mask(hit_cells(map_batch(batch), grid, f), grid);
  r.model = batch.model;
  r.cls = f;
  r.method = CoverageMethod::Empirical;
  r.sample_count = batch.count;
  r.seed = seed;
  return r;
}

CoverageReport empirical_coverage_serial(const SampleBatch& batch, const TriangleGrid& grid,
                                         ClassFilter f, std::uint64_t seed) {
  CoverageReport r =
      report_from_mask(hit_cells_serial(map_batch_serial(batch), grid, f), grid);
  r.model = batch.model;
  r.cls = f;
  r.method = CoverageMethod::Empirical;
  r.sample_count = batch.count;
  r.seed = seed;
  return r;
}

std::vector<std::uint8_t> oracle_feasible_cells_serial(const TriangleGrid& grid, Model m,
                                                       ClassFilter f) {
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = model_feasible(m, grid.centroid(i), f).feasible ? 1 : 0;
  return mask;
}

std::vector<std::uint8_t> oracle_feasible_cells(const TriangleGrid& grid, Model m,
                                                ClassFilter f) {
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  const long long n = static_cast<long long>(mask.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    mask[idx] = model_feasible(m, grid.centroid(idx), f).feasible ? 1 : 0;
  }
  return mask;
}

CoverageReport oracle_coverage(const TriangleGrid& grid, Model m, ClassFilter f) {
  CoverageReport r = report_from_mask(oracle_feasible_cells(grid, m, f), grid);
  r.model = m;
  r.cls = f;
  r.method = CoverageMethod::Oracle;
  return r;
}

CoverageReport oracle_coverage_serial(const TriangleGrid& grid, Model m, ClassFilter f) {
  CoverageReport r = report_from_mask(oracle_feasible_cells_serial(grid, m, f), grid);
  r.model = m;
  r.cls = f;
  r.method = CoverageMethod::Oracle;
  return r;
}

Table2 table2_report(int oracle_resolution, int empirical_resolution, std::size_t samples,
                     std::uint64_t seed) {
  Table2 t;
  t.oracle_resolution = oracle_resolution;
  t.empirical_resolution = empirical_resolution;
  t.samples = samples;
  t.seed = seed;

  const TriangleGrid oracle_grid(oracle_resolution);
  const TriangleGrid empirical_grid(empirical_resolution);
  constexpr std::array<ClassFilter, 3> kCols{ClassFilter::All, ClassFilter::Intransitive,
                                             ClassFilter::Transitive};

  for (std::size_t j = 0; j < kCols.size(); ++j) {
    t.oracle_classical[j] =
        oracle_coverage(oracle_grid, Model::Classical, kCols[j]).fraction;
    t.oracle_quant[j] = oracle_coverage(oracle_grid, Model::Quant, kCols[j]).fraction;
  }

  const SampleBatch classical = sample_classical(samples, seed);
  const SampleBatch prequant = sample_prequant(samples, seed);
  const SampleBatch quant = sample_quant(samples, seed);
  const auto classical_pts = map_batch(classical);
  const auto prequant_pts = map_batch(prequant);
  const auto quant_pts = map_batch(quant);

  for (std::size_t j = 0; j < kCols.size(); ++j) {
    const auto frac = [&](const std::vector<MappedPoint>& pts) {
      const auto mask = hit_cells(pts, empirical_grid, kCols[j]);
      return static_cast<double>(std::count(mask.begin(), mask.end(), std::uint8_t{1})) /
             static_cast<double>(empirical_grid.cell_count());
    };
    t.empirical_classical[j] = frac(classical_pts);
    t.empirical_prequant[j] = frac(prequant_pts);
    t.empirical_quant[j] = frac(quant_pts);
    t.classical_prequant_delta =
        std::max(t.classical_prequant_delta,
                 std::fabs(t.empirical_classical[j] - t.empirical_prequant[j]));
  }
  return t;
}

}  // namespace catsim
