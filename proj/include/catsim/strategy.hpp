#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

namespace catsim {

// The three strategy spaces of the game.
enum class Model { Classical, Prequant, Quant };

std::string_view model_name(Model m);
std::optional<Model> parse_model(std::string_view name);

// Tolerances of the cube -> triangle map: d_tol rejects degenerate
// determinants, q_tol absorbs roundoff at the triangle boundary.
inline constexpr double kDetTol = 1e-12;
inline constexpr double kFreqTol = 1e-12;

// The eight deterministic choice functions f_k over the pairs
// (1,0), (2,0), (2,1), in that order. entries[k][j] is the food picked.
struct ChoiceFunctionTable {
  std::array<std::array<int, 3>, 8> entries;
};

const ChoiceFunctionTable& choice_table();

// Mixture weights over the eight choice functions; a point of the 7-simplex.
struct ClassicalStrategy {
  std::array<double, 8> p{};
};

// Unit vector of S^15: real/imag split of 8 amplitudes, |a_i|^2 = x_{2i}^2 + x_{2i+1}^2.
struct PrequantStrategy {
  std::array<double, 16> x{};
};

// Unit vector of S^2 (Bloch-style point of the single-qubit model).
struct QuantumStrategy {
  double x1 = 0, x2 = 0, x3 = 0;
};

// Canonical conditional triple:
//   alpha = P(C0|B1), beta = P(C1|B0), gamma = P(C0|B2),
// where B_j is the offered pair lacking food j and C_k the choice of food k.
// The complementary conditionals are derived; P(C_j|B_j) = 0 identically.
struct ConditionalTriple {
  double alpha = 0, beta = 0, gamma = 0;

  double p_c2_b1() const { return 1.0 - alpha; }
  double p_c2_b0() const { return 1.0 - beta; }
  double p_c1_b2() const { return 1.0 - gamma; }
};

// Barycentric pair frequencies q_j = P(B_j); a point of the triangle T2.
struct FrequencyTriple {
  double q0 = 0, q1 = 0, q2 = 0;
};

// Long-run frequency of each food in the diet.
struct OccupancyTriple {
  double w0 = 0, w1 = 0, w2 = 0;
};

// CycleA: preference cycle 0 > 2 > 1 > 0, i.e. P(C2|B1), P(C1|B0), P(C0|B2)
// all below 1/2. CycleB: the reverse cycle (all above 1/2). Any conditional
// exactly 1/2 classifies as Transitive.
enum class TransitivityClass { CycleA, CycleB, Transitive };

std::string_view class_name(TransitivityClass c);

// Extended complex strategy parameter of the quantized model (CP^1 point).
struct ZParam {
  std::complex<double> value{0.0, 0.0};
  bool is_infinity = false;

  static ZParam infinity() { return {{0.0, 0.0}, true}; }
};

// Image of one strategy: conditionals, determinant, frequencies (when the
// strategy is optimal for some q), and the transitivity class.
struct MappedPoint {
  Model model = Model::Classical;
  ConditionalTriple c;
  double d = 0;
  std::optional<FrequencyTriple> q;
  TransitivityClass cls = TransitivityClass::Transitive;
};

ConditionalTriple classical_conditionals(const ClassicalStrategy& s);
ConditionalTriple prequant_conditionals(const PrequantStrategy& s);
ConditionalTriple quant_conditionals(const QuantumStrategy& s);

// Stereographic chart: z = 0 maps to (0,0,-1), z = infinity to (0,0,1).
// The convention is pinned by the measurement probabilities of the three
// conjugated bases; see the consistency tests.
QuantumStrategy z_to_sphere(const ZParam& z);

// d = alpha (1-beta)(1-gamma) + (1-alpha) beta gamma, the determinant of the
// 3x3 conditional-probability matrix M[k][j] = P(C_k|B_j).
double determinant_d(const ConditionalTriple& c);

// The unique q for which the strategy is optimal (occupancies 1/3 each), or
// nullopt when d is degenerate or the solution leaves the simplex.
std::optional<FrequencyTriple> optimal_frequencies(const ConditionalTriple& c);

OccupancyTriple occupancy(const ConditionalTriple& c, const FrequencyTriple& q);

TransitivityClass classify(const ConditionalTriple& c);

// Right inverse of classical_conditionals: the product strategy that treats
// the three pair choices as independent coins.
ClassicalStrategy product_preimage(const ConditionalTriple& c);

// Real-amplitude embedding of a mixture into S^15.
PrequantStrategy classical_embed(const ClassicalStrategy& s);

MappedPoint map_strategy(const ClassicalStrategy& s);
MappedPoint map_strategy(const PrequantStrategy& s);
MappedPoint map_strategy(const QuantumStrategy& s);
MappedPoint map_conditionals(Model m, const ConditionalTriple& c);

}  // namespace catsim
