#include "catsim/feasibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace catsim {

std::string_view class_filter_name(ClassFilter f) {
  switch (f) {
    case ClassFilter::All: return "all";
    case ClassFilter::Intransitive: return "intransitive";
    case ClassFilter::Transitive: return "transitive";
  }
  return "?";
}

std::optional<ClassFilter> parse_class_filter(std::string_view name) {
  if (name == "all") return ClassFilter::All;
  if (name == "intransitive") return ClassFilter::Intransitive;
  if (name == "transitive") return ClassFilter::Transitive;
  return std::nullopt;
}

bool class_matches(ClassFilter f, TransitivityClass c) {
  switch (f) {
    case ClassFilter::All: return true;
    case ClassFilter::Intransitive: return c != TransitivityClass::Transitive;
    case ClassFilter::Transitive: return c == TransitivityClass::Transitive;
  }
  return false;
}

ConditionalTriple SolutionLine::at(double t) const {
  switch (kind) {
    case Kind::GammaParam: return {a0 + a1 * t, b0 + b1 * t, t};
    case Kind::AlphaFree: return {t, fixed_star, gamma_star};
    case Kind::BetaFree: return {fixed_star, t, gamma_star};
    case Kind::Empty: break;
  }
  return {};
}

SolutionLine solution_line(const FrequencyTriple& q) {
  SolutionLine line;
  const double third = 1.0 / 3.0;
  if (q.q1 <= 0.0 && q.q0 <= 0.0) return line;  // vertex (0,0,1): inconsistent
  if (q.q1 <= 0.0) {
    if (q.q2 <= 0.0) return line;  // vertex (1,0,0): omega0 identically 0
    line.kind = SolutionLine::Kind::AlphaFree;
    line.gamma_star = third / q.q2;
    line.fixed_star = (third - (1.0 - line.gamma_star) * q.q2) / q.q0;
    return line;
  }
  if (q.q0 <= 0.0) {
    if (q.q2 <= 0.0) return line;  // vertex (0,1,0): omega1 identically 0
    line.kind = SolutionLine::Kind::BetaFree;
    line.gamma_star = 1.0 - third / q.q2;
    line.fixed_star = (third - line.gamma_star * q.q2) / q.q1;
    return line;
  }
  line.kind = SolutionLine::Kind::GammaParam;
  line.a0 = third / q.q1;
  line.a1 = -q.q2 / q.q1;
  line.b0 = (third - q.q2) / q.q0;
  line.b1 = q.q2 / q.q0;
  return line;
}

namespace {

constexpr double kHalf = 0.5;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

ConditionalTriple clamp_triple(ConditionalTriple c) {
  return {clamp01(c.alpha), clamp01(c.beta), clamp01(c.gamma)};
}

struct Interval {
  double lo, hi;

  bool empty() const { return lo > hi; }

  // Intersect with the closed half-line c0 + c1 t >= 0, widened by the slack.
  void cut(double c0, double c1) {
    c0 += kFeasSlack;
    if (c1 > 0.0) {
      lo = std::max(lo, -c0 / c1);
    } else if (c1 < 0.0) {
      hi = std::min(hi, -c0 / c1);
    } else if (c0 < 0.0) {
      lo = 1.0;
      hi = -1.0;
    }
  }
};

// Closed octant pattern: per-coordinate sign on (alpha, beta, gamma);
// +1 for >= 1/2, -1 for <= 1/2, 0 unconstrained.
struct Pattern {
  int sa = 0, sb = 0, sg = 0;
};

constexpr Pattern kPatternAll{};
constexpr Pattern kPatternCycleA{+1, -1, -1};
constexpr Pattern kPatternCycleB{-1, +1, +1};
constexpr std::array<Pattern, 6> kPatternsTransitive{{
    {-1, -1, -1}, {-1, -1, +1}, {-1, +1, -1},
    {+1, -1, +1}, {+1, +1, -1}, {+1, +1, +1},
}};

bool sign_holds(int sign, double value) {
  if (sign > 0) return value >= kHalf;
  if (sign < 0) return value <= kHalf;
  return true;
}

// Clip the solution line against the cube and the closed octant pattern;
// returns the midpoint candidate of the feasible parameter interval.
std::optional<ConditionalTriple> clip_line(const SolutionLine& line, const Pattern& p) {
  switch (line.kind) {
    case SolutionLine::Kind::Empty: return std::nullopt;

    case SolutionLine::Kind::GammaParam: {
      Interval iv{-kFeasSlack, 1.0 + kFeasSlack};
      iv.cut(line.a0, line.a1);              // alpha >= 0
      iv.cut(1.0 - line.a0, -line.a1);       // alpha <= 1
      iv.cut(line.b0, line.b1);              // beta >= 0
      iv.cut(1.0 - line.b0, -line.b1);       // beta <= 1
      if (p.sa > 0) iv.cut(line.a0 - kHalf, line.a1);
      if (p.sa < 0) iv.cut(kHalf - line.a0, -line.a1);
      if (p.sb > 0) iv.cut(line.b0 - kHalf, line.b1);
      if (p.sb < 0) iv.cut(kHalf - line.b0, -line.b1);
      if (p.sg > 0) iv.cut(-kHalf, 1.0);
      if (p.sg < 0) iv.cut(kHalf, -1.0);
      if (iv.empty()) return std::nullopt;
      const double t = clamp01(0.5 * (iv.lo + iv.hi));
      return clamp_triple(line.at(t));
    }

    case SolutionLine::Kind::AlphaFree: {
      if (line.gamma_star < -kFeasSlack || line.gamma_star > 1.0 + kFeasSlack)
        return std::nullopt;
      if (line.fixed_star < -kFeasSlack || line.fixed_star > 1.0 + kFeasSlack)
        return std::nullopt;
      if (!sign_holds(p.sb, line.fixed_star)) return std::nullopt;
      if (!sign_holds(p.sg, line.gamma_star)) return std::nullopt;
      Interval iv{0.0, 1.0};
      if (p.sa > 0) iv.lo = kHalf;
      if (p.sa < 0) iv.hi = kHalf;
      if (iv.empty()) return std::nullopt;
      return clamp_triple(line.at(0.5 * (iv.lo + iv.hi)));
    }

    case SolutionLine::Kind::BetaFree: {
      if (line.gamma_star < -kFeasSlack || line.gamma_star > 1.0 + kFeasSlack)
        return std::nullopt;
      if (line.fixed_star < -kFeasSlack || line.fixed_star > 1.0 + kFeasSlack)
        return std::nullopt;
      if (!sign_holds(p.sa, line.fixed_star)) return std::nullopt;
      if (!sign_holds(p.sg, line.gamma_star)) return std::nullopt;
      Interval iv{0.0, 1.0};
      if (p.sb > 0) iv.lo = kHalf;
      if (p.sb < 0) iv.hi = kHalf;
      if (iv.empty()) return std::nullopt;
      return clamp_triple(line.at(0.5 * (iv.lo + iv.hi)));
    }
  }
  return std::nullopt;
}

Verdict classical_try(const SolutionLine& line, const Pattern& p,
                      std::optional<TransitivityClass> required) {
  const auto w = clip_line(line, p);
  if (!w) return {};
  // Cycle patterns are open regions; the interval midpoint must satisfy the
  // strict predicate, which classify() evaluates.
  if (required && classify(*w) != *required) return {};
  return {true, w};
}

}  // namespace

Verdict classical_feasible(const FrequencyTriple& q, ClassFilter f) {
  const SolutionLine line = solution_line(q);
  if (line.kind == SolutionLine::Kind::Empty) return {};
  switch (f) {
    case ClassFilter::All:
      return classical_try(line, kPatternAll, std::nullopt);
    case ClassFilter::Intransitive: {
      if (auto v = classical_try(line, kPatternCycleA, TransitivityClass::CycleA); v.feasible)
        return v;
      return classical_try(line, kPatternCycleB, TransitivityClass::CycleB);
    }
    case ClassFilter::Transitive: {
      for (const Pattern& p : kPatternsTransitive)
        if (auto v = classical_try(line, p, TransitivityClass::Transitive); v.feasible)
          return v;
      return {};
    }
  }
  return {};
}

Verdict classical_cycle_feasible(const FrequencyTriple& q, TransitivityClass cycle) {
  const SolutionLine line = solution_line(q);
  if (line.kind == SolutionLine::Kind::Empty) return {};
  if (cycle == TransitivityClass::CycleA)
    return classical_try(line, kPatternCycleA, TransitivityClass::CycleA);
  return classical_try(line, kPatternCycleB, TransitivityClass::CycleB);
}

namespace {

// Real intersections of the line with the inscribed sphere
// (2a-1)^2 + (2b-1)^2 + (2g-1)^2 = 1. At most two points; a near-tangent
// discriminant collapses to the double root. Steep lines (small q0 or q1)
// blow up the quadratic coefficients, so the whole computation runs in
// extended precision or the witnesses land visibly off the sphere.
struct SphereRoots {
  int count = 0;
  std::array<ConditionalTriple, 2> w{};
};

SphereRoots sphere_roots(const FrequencyTriple& q, const SolutionLine& line) {
  SphereRoots roots;
  switch (line.kind) {
    case SolutionLine::Kind::Empty: return roots;

    case SolutionLine::Kind::GammaParam: {
      const long double third = 1.0L / 3.0L;
      const long double a0 = third / static_cast<long double>(q.q1);
      const long double a1 = -static_cast<long double>(q.q2) / q.q1;
      const long double b0 = (third - static_cast<long double>(q.q2)) / q.q0;
      const long double b1 = static_cast<long double>(q.q2) / q.q0;
      const long double A1 = 2.0L * a1, A0 = 2.0L * a0 - 1.0L;
      const long double B1 = 2.0L * b1, B0 = 2.0L * b0 - 1.0L;
      const long double c2 = A1 * A1 + B1 * B1 + 4.0L;
      const long double c1 = 2.0L * A1 * A0 + 2.0L * B1 * B0 - 4.0L;
      const long double c0 = A0 * A0 + B0 * B0;
      const long double p = c1 / c2;
      const long double r = c0 / c2;
      const long double disc = 0.25L * p * p - r;
      const auto emit = [&](long double t) {
        roots.w[roots.count++] = clamp_triple({static_cast<double>(a0 + a1 * t),
                                               static_cast<double>(b0 + b1 * t),
                                               static_cast<double>(t)});
      };
      if (disc < -kDiscCutoff) return roots;
      if (disc < kDiscCutoff) {
        emit(-0.5L * p);
        return roots;
      }
      const long double s = std::sqrt(disc);
      const long double big = -(0.5L * p + std::copysign(s, p));
      const long double small = big != 0.0L ? r / big : -0.5L * p + s;
      emit(std::min(big, small));
      emit(std::max(big, small));
      return roots;
    }

    case SolutionLine::Kind::AlphaFree:
    case SolutionLine::Kind::BetaFree: {
      const double u = 2.0 * line.fixed_star - 1.0;
      const double v = 2.0 * line.gamma_star - 1.0;
      // (2t-1)^2 = 1 - u^2 - v^2, monic in t with discriminant rem/4.
      const double rem = (1.0 - u * u - v * v) / 4.0;
      const auto emit = [&](double t) {
        roots.w[roots.count++] = clamp_triple(line.at(t));
      };
      if (rem < -kDiscCutoff) return roots;
      if (rem < kDiscCutoff) {
        emit(0.5);
        return roots;
      }
      const double s = std::sqrt(rem);
      emit(0.5 - s);
      emit(0.5 + s);
      return roots;
    }
  }
  return roots;
}

Verdict quant_match(const FrequencyTriple& q, auto&& accept) {
  const SolutionLine line = solution_line(q);
  if (line.kind == SolutionLine::Kind::Empty) return {};
  const SphereRoots roots = sphere_roots(q, line);
  for (int i = 0; i < roots.count; ++i) {
    if (accept(classify(roots.w[i]))) return {true, roots.w[i]};
  }
  return {};
}

}  // namespace

Verdict quant_feasible(const FrequencyTriple& q, ClassFilter f) {
  return quant_match(q, [f](TransitivityClass c) { return class_matches(f, c); });
}

Verdict quant_cycle_feasible(const FrequencyTriple& q, TransitivityClass cycle) {
  return quant_match(q, [cycle](TransitivityClass c) { return c == cycle; });
}

Verdict prequant_feasible(const FrequencyTriple& q, ClassFilter f) {
  return classical_feasible(q, f);
}

Verdict model_feasible(Model m, const FrequencyTriple& q, ClassFilter f) {
  switch (m) {
    case Model::Classical: return classical_feasible(q, f);
    case Model::Prequant: return prequant_feasible(q, f);
    case Model::Quant: return quant_feasible(q, f);
  }
  return {};
}

}  // namespace catsim
