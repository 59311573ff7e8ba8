#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "catsim/feasibility.hpp"
#include "catsim/sampling.hpp"
#include "testutil.hpp"

using namespace catsim;
using namespace catsim::testutil;

namespace {

constexpr double kThird = 1.0 / 3.0;
const FrequencyTriple kCenter{kThird, kThird, kThird};

FrequencyTriple random_simplex_q(SplitMix64& g) {
  std::array<double, 3> q{};
  simplex_point(g, q);
  return {q[0], q[1], q[2]};
}

void check_witness(Model m, const FrequencyTriple& q, ClassFilter f, const Verdict& v) {
  REQUIRE(v.witness.has_value());
  const ConditionalTriple& w = *v.witness;
  CHECK(occupancy_residual(w, q) < 1e-10);
  CHECK(class_matches(f, classify(w)));
  if (m == Model::Quant) {
    const double x1 = 2.0 * w.alpha - 1.0;
    const double x2 = 2.0 * w.beta - 1.0;
    const double x3 = 1.0 - 2.0 * w.gamma;
    CHECK(std::fabs(x1 * x1 + x2 * x2 + x3 * x3 - 1.0) < 1e-10);
  }
}

}  // namespace

TEST_CASE("solution line at the simplex center: alpha = 1-gamma, beta = gamma") {
  const SolutionLine line = solution_line(kCenter);
  REQUIRE(line.kind == SolutionLine::Kind::GammaParam);
  for (double g : {0.0, 0.25, 0.5, 0.8, 1.0}) {
    const ConditionalTriple c = line.at(g);
    CHECK(std::fabs(c.alpha - (1.0 - g)) < 1e-12);
    CHECK(std::fabs(c.beta - g) < 1e-12);
    CHECK(occupancy_residual(c, kCenter) < 1e-12);
  }
}

TEST_CASE("solution line: triangle vertices are inconsistent") {
  CHECK(solution_line({1, 0, 0}).kind == SolutionLine::Kind::Empty);
  CHECK(solution_line({0, 1, 0}).kind == SolutionLine::Kind::Empty);
  CHECK(solution_line({0, 0, 1}).kind == SolutionLine::Kind::Empty);
}

TEST_CASE("solution line with q1 = 0 pins gamma and frees alpha") {
  const FrequencyTriple q{2.0 / 3.0, 0.0, 1.0 / 3.0};
  const SolutionLine line = solution_line(q);
  REQUIRE(line.kind == SolutionLine::Kind::AlphaFree);
  CHECK(line.gamma_star == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(line.fixed_star == doctest::Approx(0.5).epsilon(1e-14));
  // (1/2, 1/2, 1) lies in the set
  const ConditionalTriple c = line.at(0.5);
  CHECK(std::fabs(c.alpha - 0.5) < 1e-12);
  CHECK(std::fabs(c.beta - 0.5) < 1e-12);
  CHECK(std::fabs(c.gamma - 1.0) < 1e-12);
  CHECK(occupancy_residual(c, q) < 1e-12);
}

TEST_CASE("solution line on the whole line satisfies the occupancy system") {
  SplitMix64 g(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const FrequencyTriple q = random_simplex_q(g);
    const SolutionLine line = solution_line(q);
    if (line.kind == SolutionLine::Kind::Empty) continue;
    for (double t : {0.1, 0.5, 0.9}) {
      const ConditionalTriple c = line.at(t);
      const OccupancyTriple w = occupancy(c, q);
      CHECK(std::fabs(w.w0 - kThird) < 1e-9);
      CHECK(std::fabs(w.w1 - kThird) < 1e-9);
    }
  }
}

TEST_CASE("classical feasibility at the center") {
  const Verdict all = classical_feasible(kCenter, ClassFilter::All);
  REQUIRE(all.feasible);
  CHECK(all.witness->alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(all.witness->beta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(all.witness->gamma == doctest::Approx(0.5).epsilon(1e-12));

  const Verdict intr = classical_feasible(kCenter, ClassFilter::Intransitive);
  REQUIRE(intr.feasible);
  check_witness(Model::Classical, kCenter, ClassFilter::Intransitive, intr);

  const Verdict trans = classical_feasible(kCenter, ClassFilter::Transitive);
  REQUIRE(trans.feasible);
  CHECK(trans.witness->alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trans.witness->beta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trans.witness->gamma == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("vertices are infeasible in every model and class") {
  for (const FrequencyTriple q : {FrequencyTriple{1, 0, 0}, FrequencyTriple{0, 1, 0},
                                  FrequencyTriple{0, 0, 1}}) {
    for (ClassFilter f :
         {ClassFilter::All, ClassFilter::Intransitive, ClassFilter::Transitive}) {
      CHECK_FALSE(classical_feasible(q, f).feasible);
      CHECK_FALSE(quant_feasible(q, f).feasible);
      CHECK_FALSE(prequant_feasible(q, f).feasible);
    }
  }
}

TEST_CASE("classical region boundary: the hexagon edge q0 = 2/3") {
  CHECK(classical_feasible({2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}, ClassFilter::All).feasible);
  CHECK_FALSE(classical_feasible({0.67, 0.165, 0.165}, ClassFilter::All).feasible);
  CHECK_FALSE(classical_feasible({0.7, 0.15, 0.15}, ClassFilter::All).feasible);
}

TEST_CASE("quant feasibility at the center: roots are the intransitive pair") {
  const double root_low = 0.5 * (1.0 - 1.0 / std::sqrt(3.0));
  const double root_high = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));

  const Verdict all = quant_feasible(kCenter, ClassFilter::All);
  REQUIRE(all.feasible);
  const double wg = all.witness->gamma;
  CHECK((std::fabs(wg - root_low) < 1e-12 || std::fabs(wg - root_high) < 1e-12));
  check_witness(Model::Quant, kCenter, ClassFilter::All, all);

  const Verdict intr = quant_feasible(kCenter, ClassFilter::Intransitive);
  REQUIRE(intr.feasible);
  check_witness(Model::Quant, kCenter, ClassFilter::Intransitive, intr);

  // both sphere roots are strictly cyclic, so no transitive optimum exists
  CHECK_FALSE(quant_feasible(kCenter, ClassFilter::Transitive).feasible);
}

TEST_CASE("prequant verdicts equal classical verdicts, witnesses lift to S^15") {
  SplitMix64 g(22);
  for (int trial = 0; trial < 2000; ++trial) {
    const FrequencyTriple q = random_simplex_q(g);
    for (ClassFilter f :
         {ClassFilter::All, ClassFilter::Intransitive, ClassFilter::Transitive}) {
      const Verdict c = classical_feasible(q, f);
      const Verdict p = prequant_feasible(q, f);
      CHECK(c.feasible == p.feasible);
      if (!p.feasible) continue;
      const ConditionalTriple& w = *p.witness;
      const ConditionalTriple lifted =
          prequant_conditionals(classical_embed(product_preimage(w)));
      CHECK(std::fabs(lifted.alpha - w.alpha) < 1e-10);
      CHECK(std::fabs(lifted.beta - w.beta) < 1e-10);
      CHECK(std::fabs(lifted.gamma - w.gamma) < 1e-10);
      CHECK(occupancy_residual(lifted, q) < 1e-10);
    }
  }
}

TEST_CASE("soundness: every feasible verdict carries a verifying witness") {
  SplitMix64 g(23);
  for (int trial = 0; trial < 5000; ++trial) {
    const FrequencyTriple q = random_simplex_q(g);
    for (ClassFilter f :
         {ClassFilter::All, ClassFilter::Intransitive, ClassFilter::Transitive}) {
      for (Model m : {Model::Classical, Model::Quant}) {
        const Verdict v = model_feasible(m, q, f);
        if (v.feasible) check_witness(m, q, f, v);
      }
    }
  }
}

TEST_CASE("monotone nesting: all = intransitive or transitive") {
  SplitMix64 g(24);
  for (int trial = 0; trial < 5000; ++trial) {
    const FrequencyTriple q = random_simplex_q(g);
    for (Model m : {Model::Classical, Model::Quant}) {
      const bool all = model_feasible(m, q, ClassFilter::All).feasible;
      const bool intr = model_feasible(m, q, ClassFilter::Intransitive).feasible;
      const bool trans = model_feasible(m, q, ClassFilter::Transitive).feasible;
      CHECK(all == (intr || trans));
    }
  }
}

TEST_CASE("cycle swap symmetry holds at the simplex center") {
  CHECK(classical_cycle_feasible(kCenter, TransitivityClass::CycleA).feasible ==
        classical_cycle_feasible(kCenter, TransitivityClass::CycleB).feasible);
  CHECK(quant_cycle_feasible(kCenter, TransitivityClass::CycleA).feasible ==
        quant_cycle_feasible(kCenter, TransitivityClass::CycleB).feasible);
  CHECK(classical_cycle_feasible(kCenter, TransitivityClass::CycleA).feasible);
  CHECK(quant_cycle_feasible(kCenter, TransitivityClass::CycleA).feasible);
}

TEST_CASE("completeness against the forward map: classical cube grid") {
  // every mapped strategy must be feasible at its own image for its class
  std::size_t violations = 0;
  std::size_t mapped = 0;
  constexpr int kSteps = 50;  // 0.02 grid
  for (int ia = 0; ia <= kSteps; ++ia) {
    for (int ib = 0; ib <= kSteps; ++ib) {
      for (int ig = 0; ig <= kSteps; ++ig) {
        const ConditionalTriple c{ia / static_cast<double>(kSteps),
                                  ib / static_cast<double>(kSteps),
                                  ig / static_cast<double>(kSteps)};
        const auto q = optimal_frequencies(c);
        if (!q) continue;
        ++mapped;
        const ClassFilter f = classify(c) == TransitivityClass::Transitive
                                  ? ClassFilter::Transitive
                                  : ClassFilter::Intransitive;
        if (!classical_feasible(*q, f).feasible) ++violations;
      }
    }
  }
  CHECK(mapped > 50000);
  CHECK(violations == 0);
}

TEST_CASE("completeness against the forward map: quant sphere net") {
  std::size_t violations = 0;
  std::size_t mapped = 0;
  for (const QuantumStrategy& s : sphere_net(10000)) {
    const ConditionalTriple c = quant_conditionals(s);
    const auto q = optimal_frequencies(c);
    if (!q) continue;
    ++mapped;
    const ClassFilter f = classify(c) == TransitivityClass::Transitive
                              ? ClassFilter::Transitive
                              : ClassFilter::Intransitive;
    if (!quant_feasible(*q, f).feasible) ++violations;
  }
  CHECK(mapped > 3000);
  CHECK(violations == 0);
}
