#pragma once

#include <optional>
#include <string_view>

#include "catsim/strategy.hpp"

namespace catsim {

enum class ClassFilter { All, Intransitive, Transitive };

std::string_view class_filter_name(ClassFilter f);
std::optional<ClassFilter> parse_class_filter(std::string_view name);
bool class_matches(ClassFilter f, TransitivityClass c);

// Slack for cube containment inside the oracle; absorbs roundoff of forward
// images and of grid centroids that sit exactly on region boundaries.
// Witness coordinates are clamped back into [0,1], so the occupancy residual
// stays below the 1e-10 verification bound.
inline constexpr double kFeasSlack = 1e-11;

// Discriminant cutoff of the line/sphere quadratic; near-tangency counts the
// double root.
inline constexpr double kDiscCutoff = 1e-14;

// Affine solution set of omega0 = omega1 = 1/3 for fixed q (omega2 follows).
// In general position (q0,q1 > 0) gamma is free with alpha, beta affine in
// it. A zero q1 pins gamma and beta and frees alpha; a zero q0 pins gamma and
// alpha and frees beta. Inconsistent systems (triangle vertices) are Empty.
struct SolutionLine {
  enum class Kind { GammaParam, AlphaFree, BetaFree, Empty };

  Kind kind = Kind::Empty;
  // GammaParam: alpha = a0 + a1 t, beta = b0 + b1 t, gamma = t.
  double a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  // AlphaFree/BetaFree: pinned gamma and the pinned remaining coordinate.
  double gamma_star = 0, fixed_star = 0;

  // Point of the affine set at parameter t (gamma, alpha, or beta by kind).
  ConditionalTriple at(double t) const;
};

SolutionLine solution_line(const FrequencyTriple& q);

struct Verdict {
  bool feasible = false;
  std::optional<ConditionalTriple> witness;
};

// Does an optimal strategy of the requested class exist for q?
// Classical: clips the solution line against the cube and the class octants
// by interval arithmetic on the free parameter.
Verdict classical_feasible(const FrequencyTriple& q, ClassFilter f);

// Quant: intersects the solution line with the inscribed sphere
// (2a-1)^2 + (2b-1)^2 + (1-2g)^2 = 1 and classifies the roots. Sphere
// membership implies cube membership.
Verdict quant_feasible(const FrequencyTriple& q, ClassFilter f);

// Identical feasible sets to the classical model (the S^15 projection is onto
// the cube); witnesses lift through product_preimage + classical_embed.
Verdict prequant_feasible(const FrequencyTriple& q, ClassFilter f);

Verdict model_feasible(Model m, const FrequencyTriple& q, ClassFilter f);

// Single-cycle variants, used by the symmetry tests.
Verdict classical_cycle_feasible(const FrequencyTriple& q, TransitivityClass cycle);
Verdict quant_cycle_feasible(const FrequencyTriple& q, TransitivityClass cycle);

}  // namespace catsim
