#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "catsim/sampling.hpp"
#include "catsim/strategy.hpp"

namespace catsim {

// Shortest decimal that parses back to exactly the same double (at most 17
// significant digits).
std::string format_double(double v);

// One sampled strategy with its image. The strategy width is fixed per model
// (8, 16, or 3 coordinates); q columns are empty when no optimal frequencies
// exist.
struct PointRecord {
  Model model = Model::Classical;
  std::vector<double> strategy;
  double alpha = 0, beta = 0, gamma = 0, d = 0;
  bool has_q = false;
  double q0 = 0, q1 = 0, q2 = 0;
  TransitivityClass cls = TransitivityClass::Transitive;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_header(Model m);

std::vector<PointRecord> make_records(const SampleBatch& batch,
                                      const std::vector<MappedPoint>& mapped);

void write_csv(std::ostream& os, const SampleBatch& batch,
               const std::vector<MappedPoint>& mapped);
void write_csv(std::ostream& os, const std::vector<PointRecord>& records, Model m);
void write_jsonl(std::ostream& os, const SampleBatch& batch,
                 const std::vector<MappedPoint>& mapped);

// Reads a CSV produced by write_csv; throws ParseError on malformed input.
std::vector<PointRecord> parse_csv(std::istream& is);

}  // namespace catsim
