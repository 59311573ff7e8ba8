#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "catsim/rng.hpp"
#include "catsim/strategy.hpp"

namespace catsim {

// Strategies are produced in fixed chunks, each with its own derived seed, so
// batches are byte-identical for any number of OpenMP workers.
inline constexpr std::size_t kSampleChunk = 4096;

std::size_t model_dim(Model m);  // 8, 16, 3

// n strategies stored row-major, model_dim(model) doubles per row.
struct SampleBatch {
  Model model = Model::Classical;
  std::size_t count = 0;
  std::vector<double> values;

  std::size_t dim() const { return model_dim(model); }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dim(), dim()};
  }
};

// Uniform point of S^dim: dim+1 standard normals, normalized. The measure-zero
// all-zero draw resamples.
void sphere_point(SplitMix64& g, std::span<double> out);

// Uniform point of the k-simplex: k+1 unit exponentials normalized by their
// sum (Dirichlet(1,...,1)).
void simplex_point(SplitMix64& g, std::span<double> out);

SampleBatch sample_classical(std::size_t n, std::uint64_t seed);
SampleBatch sample_prequant(std::size_t n, std::uint64_t seed);
SampleBatch sample_quant(std::size_t n, std::uint64_t seed);
SampleBatch sample_batch(Model m, std::size_t n, std::uint64_t seed);

ClassicalStrategy classical_at(const SampleBatch& b, std::size_t i);
PrequantStrategy prequant_at(const SampleBatch& b, std::size_t i);
QuantumStrategy quant_at(const SampleBatch& b, std::size_t i);

MappedPoint map_row(const SampleBatch& b, std::size_t i);

// Batch map through conditionals and Eq. 4; the serial twin is the reference
// implementation the parallel kernel is tested against.
std::vector<MappedPoint> map_batch(const SampleBatch& b);
std::vector<MappedPoint> map_batch_serial(const SampleBatch& b);

}  // namespace catsim
