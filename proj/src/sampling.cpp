#include "catsim/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace catsim {

std::size_t model_dim(Model m) {
  switch (m) {
    case Model::Classical: return 8;
    case Model::Prequant: return 16;
    case Model::Quant: return 3;
  }
  return 0;
}

void sphere_point(SplitMix64& g, std::span<double> out) {
  for (;;) {
    fill_gaussian(g, out);
    double norm2 = 0.0;
    for (double v : out) norm2 += v * v;
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& v : out) v *= inv;
      return;
    }
  }
}

void simplex_point(SplitMix64& g, std::span<double> out) {
  for (;;) {
    double sum = 0.0;
    for (double& v : out) {
      v = next_exponential(g);
      sum += v;
    }
    if (sum > 0.0) {
      for (double& v : out) v /= sum;
      return;
    }
  }
}

namespace {

template <typename Fill>
SampleBatch sample_impl(Model m, std::size_t n, std::uint64_t seed, Fill fill) {
  SampleBatch b;
  b.model = m;
  b.count = n;
  const std::size_t dim = b.dim();
  b.values.resize(n * dim);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
#pragma omp parallel for schedule(static)
  for (long long ci = 0; ci < static_cast<long long>(chunks); ++ci) {
    SplitMix64 g(chunk_seed(seed, static_cast<std::uint64_t>(ci)));
    const std::size_t begin = static_cast<std::size_t>(ci) * kSampleChunk;
    const std::size_t end = std::min(n, begin + kSampleChunk);
    for (std::size_t i = begin; i < end; ++i)
      fill(g, std::span<double>{b.values.data() + i * dim, dim});
  }
  return b;
}

}  // namespace

SampleBatch sample_classical(std::size_t n, std::uint64_t seed) {
  return sample_impl(Model::Classical, n, seed,
                     [](SplitMix64& g, std::span<double> row) { simplex_point(g, row); });
}

SampleBatch sample_prequant(std::size_t n, std::uint64_t seed) {
  return sample_impl(Model::Prequant, n, seed,
                     [](SplitMix64& g, std::span<double> row) { sphere_point(g, row); });
}

SampleBatch sample_quant(std::size_t n, std::uint64_t seed) {
  return sample_impl(Model::Quant, n, seed,
                     [](SplitMix64& g, std::span<double> row) { sphere_point(g, row); });
}

SampleBatch sample_batch(Model m, std::size_t n, std::uint64_t seed) {
  switch (m) {
    case Model::Classical: return sample_classical(n, seed);
    case Model::Prequant: return sample_prequant(n, seed);
    case Model::Quant: return sample_quant(n, seed);
  }
  return {};
}

ClassicalStrategy classical_at(const SampleBatch& b, std::size_t i) {
  ClassicalStrategy s;
  const auto row = b.row(i);
  std::copy(row.begin(), row.end(), s.p.begin());
  return s;
}

PrequantStrategy prequant_at(const SampleBatch& b, std::size_t i) {
  PrequantStrategy s;
  const auto row = b.row(i);
  std::copy(row.begin(), row.end(), s.x.begin());
  return s;
}

QuantumStrategy quant_at(const SampleBatch& b, std::size_t i) {
  const auto row = b.row(i);
  return {row[0], row[1], row[2]};
}

MappedPoint map_row(const SampleBatch& b, std::size_t i) {
  switch (b.model) {
    case Model::Classical: return map_strategy(classical_at(b, i));
    case Model::Prequant: return map_strategy(prequant_at(b, i));
    case Model::Quant: return map_strategy(quant_at(b, i));
  }
  return {};
}

std::vector<MappedPoint> map_batch(const SampleBatch& b) {
  std::vector<MappedPoint> out(b.count);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(b.count); ++i)
    out[static_cast<std::size_t>(i)] = map_row(b, static_cast<std::size_t>(i));
  return out;
}

std::vector<MappedPoint> map_batch_serial(const SampleBatch& b) {
  std::vector<MappedPoint> out(b.count);
  for (std::size_t i = 0; i < b.count; ++i) out[i] = map_row(b, i);
  return out;
}

}  // namespace catsim
