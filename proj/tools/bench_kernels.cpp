// Wall-time comparison of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "catsim/coverage.hpp"

using namespace catsim;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  constexpr std::size_t kN = 1'000'000;
  constexpr std::uint64_t kSeed = 1234;

  {
    SampleBatch batch;
    const double par = time_ms([&] { batch = sample_prequant(kN, kSeed); });
    SampleBatch serial_batch;
    // chunked streams are worker-independent, so one thread gives the same bytes
    const double ser = time_ms([&] {
#ifdef _OPENMP
      const int saved = omp_get_max_threads();
      omp_set_num_threads(1);
      serial_batch = sample_prequant(kN, kSeed);
      omp_set_num_threads(saved);
#else
      serial_batch = sample_prequant(kN, kSeed);
#endif
    });
    row("sample_prequant 1e6", ser, par);

    std::vector<MappedPoint> pts;
    const double mser = time_ms([&] { pts = map_batch_serial(batch); });
    const double mpar = time_ms([&] { pts = map_batch(batch); });
    row("map_batch prequant 1e6", mser, mpar);

    const TriangleGrid grid(100);
    std::vector<std::uint8_t> mask;
    const double bser = time_ms([&] { mask = hit_cells_serial(pts, grid, ClassFilter::All); });
    const double bpar = time_ms([&] { mask = hit_cells(pts, grid, ClassFilter::All); });
    row("hit_cells R=100 1e6", bser, bpar);
  }

  {
    const TriangleGrid grid(512);
    std::vector<std::uint8_t> mask;
    const double ser = time_ms(
        [&] { mask = oracle_feasible_cells_serial(grid, Model::Quant, ClassFilter::Transitive); });
    const double par = time_ms(
        [&] { mask = oracle_feasible_cells(grid, Model::Quant, ClassFilter::Transitive); });
    row("oracle quant R=512", ser, par);
  }
  return 0;
}
