#include "catsim/strategy.hpp"

#include <cmath>

namespace catsim {

std::string_view model_name(Model m) {
  switch (m) {
    case Model::Classical: return "classical";
    case Model::Prequant: return "prequant";
    case Model::Quant: return "quant";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view name) {
  if (name == "classical") return Model::Classical;
  if (name == "prequant") return Model::Prequant;
  if (name == "quant") return Model::Quant;
  return std::nullopt;
}

std::string_view class_name(TransitivityClass c) {
  switch (c) {
    case TransitivityClass::CycleA: return "cycle_a";
    case TransitivityClass::CycleB: return "cycle_b";
    case TransitivityClass::Transitive: return "transitive";
  }
  return "?";
}

const ChoiceFunctionTable& choice_table() {
  // f_k(1,0) = 1 iff bit 2 of k, f_k(2,0) = 2 iff bit 1, f_k(2,1) = 2 iff bit 0.
  static const ChoiceFunctionTable table = [] {
    ChoiceFunctionTable t{};
    for (int k = 0; k < 8; ++k) {
      t.entries[k][0] = (k & 4) ? 1 : 0;
      t.entries[k][1] = (k & 2) ? 2 : 0;
      t.entries[k][2] = (k & 1) ? 2 : 1;
    }
    return t;
  }();
  return table;
}

ConditionalTriple classical_conditionals(const ClassicalStrategy& s) {
  const auto& p = s.p;
  return {p[0] + p[1] + p[4] + p[5],   // alpha = P(C0|B1)
          p[0] + p[2] + p[4] + p[6],   // beta  = P(C1|B0)
          p[0] + p[1] + p[2] + p[3]};  // gamma = P(C0|B2)
}

ConditionalTriple prequant_conditionals(const PrequantStrategy& s) {
  const auto& x = s.x;
  const double gamma = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] +
                       x[4] * x[4] + x[5] * x[5] + x[6] * x[6] + x[7] * x[7];
  const double beta = x[0] * x[0] + x[1] * x[1] + x[4] * x[4] + x[5] * x[5] +
                      x[8] * x[8] + x[9] * x[9] + x[12] * x[12] + x[13] * x[13];
  const double alpha =
      1.0 - (x[4] * x[4] + x[5] * x[5] + x[6] * x[6] + x[7] * x[7] +
             x[12] * x[12] + x[13] * x[13] + x[14] * x[14] + x[15] * x[15]);
  return {alpha, beta, gamma};
}

ConditionalTriple quant_conditionals(const QuantumStrategy& s) {
  return {0.5 * (1.0 + s.x1), 0.5 * (1.0 + s.x2), 0.5 * (1.0 - s.x3)};
}

QuantumStrategy z_to_sphere(const ZParam& z) {
  if (z.is_infinity) return {0.0, 0.0, 1.0};
  const double norm2 = std::norm(z.value);
  if (!std::isfinite(norm2) || norm2 > 1e308) return {0.0, 0.0, 1.0};
  const double denom = 1.0 + norm2;
  return {2.0 * z.value.real() / denom, 2.0 * z.value.imag() / denom,
          (norm2 - 1.0) / denom};
}

double determinant_d(const ConditionalTriple& c) {
  return c.alpha * (1.0 - c.beta) * (1.0 - c.gamma) +
         (1.0 - c.alpha) * c.beta * c.gamma;
}

std::optional<FrequencyTriple> optimal_frequencies(const ConditionalTriple& c) {
  const double d = determinant_d(c);
  if (d <= kDetTol) return std::nullopt;
  const double a = c.alpha, b = c.beta, g = c.gamma;
  const double n2 = (a + b) / 3.0 - a * b;
  const double n1 = (g + (1.0 - b)) / 3.0 - g * (1.0 - b);
  const double n0 = ((1.0 - g) + (1.0 - a)) / 3.0 - (1.0 - g) * (1.0 - a);
  FrequencyTriple q{n0 / d, n1 / d, n2 / d};
  if (q.q0 < -kFreqTol || q.q1 < -kFreqTol || q.q2 < -kFreqTol)
    return std::nullopt;
  if (std::fabs(q.q0) < kFreqTol) q.q0 = 0.0;
  if (std::fabs(q.q1) < kFreqTol) q.q1 = 0.0;
  if (std::fabs(q.q2) < kFreqTol) q.q2 = 0.0;
  return q;
}

OccupancyTriple occupancy(const ConditionalTriple& c, const FrequencyTriple& q) {
  return {c.alpha * q.q1 + c.gamma * q.q2,
          c.beta * q.q0 + (1.0 - c.gamma) * q.q2,
          (1.0 - c.beta) * q.q0 + (1.0 - c.alpha) * q.q1};
}

TransitivityClass classify(const ConditionalTriple& c) {
  const double p21 = 1.0 - c.alpha;  // P(C2|B1)
  const double p10 = c.beta;         // P(C1|B0)
  const double p02 = c.gamma;        // P(C0|B2)
  if (p21 < 0.5 && p10 < 0.5 && p02 < 0.5) return TransitivityClass::CycleA;
  if (p21 > 0.5 && p10 > 0.5 && p02 > 0.5) return TransitivityClass::CycleB;
  return TransitivityClass::Transitive;
}

ClassicalStrategy product_preimage(const ConditionalTriple& c) {
  ClassicalStrategy s;
  for (int k = 0; k < 8; ++k) {
    const double t10 = (k & 4) ? 1.0 - c.gamma : c.gamma;  // choice from (1,0)
    const double t20 = (k & 2) ? 1.0 - c.alpha : c.alpha;  // choice from (2,0)
    const double t21 = (k & 1) ? 1.0 - c.beta : c.beta;    // choice from (2,1)
    s.p[k] = t10 * t20 * t21;
  }
  return s;
}

PrequantStrategy classical_embed(const ClassicalStrategy& s) {
  PrequantStrategy out;
  for (int k = 0; k < 8; ++k) {
    out.x[2 * k] = std::sqrt(s.p[k]);
    out.x[2 * k + 1] = 0.0;
  }
  return out;
}

MappedPoint map_conditionals(Model m, const ConditionalTriple& c) {
  MappedPoint pt;
  pt.model = m;
  pt.c = c;
  pt.d = determinant_d(c);
  pt.q = optimal_frequencies(c);
  pt.cls = classify(c);
  return pt;
}

MappedPoint map_strategy(const ClassicalStrategy& s) {
  return map_conditionals(Model::Classical, classical_conditionals(s));
}

MappedPoint map_strategy(const PrequantStrategy& s) {
  return map_conditionals(Model::Prequant, prequant_conditionals(s));
}

MappedPoint map_strategy(const QuantumStrategy& s) {
  return map_conditionals(Model::Quant, quant_conditionals(s));
}

}  // namespace catsim
