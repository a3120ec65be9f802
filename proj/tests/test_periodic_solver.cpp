#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "gperiod/contraction.hpp"
#include "gperiod/error.hpp"
#include "gperiod/finite_oracle.hpp"
#include "gperiod/periodic_solver.hpp"
#include "test_support.hpp"

namespace gperiod {
namespace {

using testing::alternating;
using testing::example_2_2;
using testing::interleaved;

TEST(CauchyTailBound, Examples) {
  EXPECT_DOUBLE_EQ(cauchy_tail_bound(1.0, 0.5, 1), 2.0);
  EXPECT_EQ(cauchy_tail_bound(0.0, 0.9, 7), 0.0);
  EXPECT_EQ(cauchy_tail_bound(0.0, 0.0, 1), 0.0);

  // Oracle: sum the first 50 steps gamma^(k-1+j) d1 of the tail directly.
  double tail = 0.0;
  for (int j = 0; j < 50; ++j) tail += std::pow(0.25, 2 + j);
  EXPECT_NEAR(tail, 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(cauchy_tail_bound(1.0, 0.25, 3), 1.0 / 12.0, 1e-15);
}

TEST(CauchyTailBound, RejectsGammaOutsideRange) {
  try {
    cauchy_tail_bound(1.0, 1.0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GammaOutOfRange);
  }
  EXPECT_THROW(cauchy_tail_bound(1.0, -0.1, 1), Error);
  EXPECT_THROW(cauchy_tail_bound(-1.0, 0.5, 1), Error);
  EXPECT_THROW(cauchy_tail_bound(1.0, 0.5, 0), Error);
}

TEST(CauchyTailBound, BoundsEveryLaterDistanceOfAGeometricSequence) {
  for (double gamma : {0.0, 0.2, 0.5, 0.8}) {
    std::vector<double> x{0.0};
    for (int k = 0; k < 60; ++k) x.push_back(x.back() + std::pow(gamma, k) * (k % 2 ? -1 : 1));
    for (std::size_t k = 1; k < 20; ++k) {
      for (std::size_t m = 1; k + m <= 60; ++m) {
        ASSERT_LE(std::abs(x[k - 1 + m] - x[k - 1]), cauchy_tail_bound(1.0, gamma, k) + 1e-12);
      }
    }
  }
}

TEST(TailBoundDetector, StopsOnAZeroStep) {
  TailBoundDetector d(1e-10);
  EXPECT_FALSE(d.observe(1.0));
  EXPECT_TRUE(d.observe(0.0));
  EXPECT_TRUE(d.constant());
  EXPECT_EQ(d.tail_bound(), 0.0);
}

TEST(TailBoundDetector, NeverStopsWithRatioOne) {
  TailBoundDetector d(1e-10);
  for (int i = 0; i < 10000; ++i) ASSERT_FALSE(d.observe(1.0));
  EXPECT_EQ(d.gamma_hat(), TailBoundDetector::kGammaCeiling);
}

TEST(TailBoundDetector, UsesTheWorstOfTheLastThreeRatios) {
  TailBoundDetector d(1e-30);
  for (double step : {1.0, 0.5, 0.05, 0.025, 0.0125}) d.observe(step);
  // Ratios 0.5, 0.1, 0.5, 0.5 -> window {0.1, 0.5, 0.5}.
  EXPECT_DOUBLE_EQ(d.gamma_hat(), 0.5);
  d.observe(0.00125);
  d.observe(0.000125);
  d.observe(0.0000125);
  EXPECT_NEAR(d.gamma_hat(), 0.1, 1e-12);
}

TEST(AdvanceSubsequences, ExampleTwoTwoIsConstantImmediately) {
  const auto states = advance_subsequences(example_2_2(), 6, PointRef::index(0), 100, 1e-10);
  ASSERT_EQ(states.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_TRUE(states[i].converged);
    EXPECT_EQ(states[i].residue, i + 1);
    EXPECT_EQ(states[i].terms.size(), 2u);
    EXPECT_EQ(states[i].terms[0], states[i].terms[1]);
    EXPECT_EQ(*states[i].limit, PointRef::index(i % 2));
  }
}

TEST(AdvanceSubsequences, EachSubsequenceAdvancesByTheNthIterate) {
  const Instance inst = interleaved();
  const auto states = advance_subsequences(inst, 4, PointRef::term(1), 1000, 1e-10);
  for (const auto& s : states) {
    for (std::size_t k = 1; k < s.terms.size(); ++k) ASSERT_EQ(s.terms[k], iterate(inst, s.terms[k - 1], 4));
    EXPECT_GE(s.gamma_hat, 0.0);
    EXPECT_LT(s.gamma_hat, 1.0);
  }
}

TEST(AdvanceSubsequences, SequenceLimitsApproachTheAccumulationPoints) {
  const Instance alt = alternating();
  const auto two = advance_subsequences(alt, 2, PointRef::term(1), 1000, 1e-10);
  EXPECT_LE(distance(alt.space(), *two[0].limit, PointRef::lower()), 1e-10);
  EXPECT_LE(distance(alt.space(), *two[1].limit, PointRef::upper()), 1e-10);

  const Instance inter = interleaved();
  const auto four = advance_subsequences(inter, 4, PointRef::term(1), 1000, 1e-10);
  const PointRef expect[] = {PointRef::lower(), PointRef::upper(), PointRef::lower(), PointRef::upper()};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(distance(inter.space(), *four[i].limit, expect[i]), 1e-10);
}

TEST(AdvanceSubsequences, NonContractionDoesNotConverge) {
  const Instance cycle(FiniteSpace::discrete(4), TableMap({1, 2, 3, 0}));
  try {
    advance_subsequences(cycle, 2, PointRef::index(0), 200, 1e-10);
    FAIL();
  } catch (const NotConvergedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConverged);
    EXPECT_EQ(e.residue(), 1u);
    EXPECT_EQ(e.last_step(), 1.0);
  }
  // Order 1 on the alternating space: steps tend to b - a, not to 0.
  EXPECT_THROW(advance_subsequences(alternating(), 1, PointRef::term(1), 2000, 1e-10), NotConvergedError);
}

TEST(ClassifyLimits, Examples) {
  const SpaceModel line = SequenceSpace(SequenceFamily::Alternating, 0.0, 1.0);
  const PointRef a = PointRef::lower();
  const PointRef b = PointRef::upper();
  auto two = classify_limits(line, {a, b}, 1e-6);
  EXPECT_EQ(two.solution_case, SolutionCase::AllDistinct);
  EXPECT_EQ(two.period, 2u);

  auto same = classify_limits(line, {a, a, a}, 1e-6);
  EXPECT_EQ(same.solution_case, SolutionCase::AllEqual);
  EXPECT_EQ(same.period, 1u);

  auto pattern = classify_limits(line, {a, b, a, b}, 1e-6);
  EXPECT_EQ(pattern.solution_case, SolutionCase::PeriodicPattern);
  EXPECT_EQ(pattern.period, 2u);

  // A near-limit within tolerance of a still clusters with it.
  auto near = classify_limits(line, {PointRef::term(41), b, a, PointRef::term(42)}, 1e-9);
  EXPECT_EQ(near.period, 2u);
}

TEST(ClassifyLimits, ConsecutiveRepeatIsAToleranceAmbiguity) {
  const SpaceModel discrete = FiniteSpace::discrete(3);
  const PointRef p = PointRef::index(0);
  const PointRef q = PointRef::index(1);
  const PointRef r = PointRef::index(2);
  // (p, p, q): no proper divisor of 3 works, and the full block repeats p.
  try {
    classify_limits(discrete, {p, p, q}, 1e-7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ToleranceAmbiguity);
  }
  EXPECT_THROW(classify_limits(discrete, {p, q, p, r}, 1e-7), Error);
  // A cluster tolerance wider than the gap merges distinct limits.
  const SpaceModel line = SequenceSpace(SequenceFamily::Alternating, 0.0, 1.0);
  EXPECT_EQ(classify_limits(line, {PointRef::lower(), PointRef::upper()}, 2.0).period, 1u);
  EXPECT_THROW(classify_limits(line, {}, 1e-7), Error);
}

TEST(Solve, Examples) {
  const PeriodicSolution from_x3 = solve(example_2_2(), 6, PointRef::index(2));
  EXPECT_EQ(from_x3.period, 3u);
  EXPECT_EQ(std::set(from_x3.cycle.begin(), from_x3.cycle.end()),
            (std::set{PointRef::index(2), PointRef::index(3), PointRef::index(4)}));
  EXPECT_EQ(from_x3.solution_case, SolutionCase::PeriodicPattern);
  EXPECT_EQ(from_x3.residual, 0.0);

  const Instance alt = alternating();
  const PeriodicSolution from_x2 = solve(alt, 2, PointRef::term(2));
  EXPECT_EQ(from_x2.period, 2u);
  EXPECT_EQ(from_x2.solution_case, SolutionCase::AllDistinct);
  EXPECT_LE(distance(alt.space(), from_x2.cycle[0], PointRef::upper()), 1e-7);
  EXPECT_LE(distance(alt.space(), from_x2.cycle[1], PointRef::lower()), 1e-7);

  const Instance constant(FiniteSpace::discrete(4), TableMap::constant(4, 2));
  const PeriodicSolution fixed = solve(constant, 3, PointRef::index(0));
  EXPECT_EQ(fixed.period, 1u);
  EXPECT_EQ(fixed.solution_case, SolutionCase::AllEqual);
  EXPECT_EQ(fixed.representative, PointRef::index(2));
}

TEST(Solve, InterleavedOrderFourIsThePeriodicPatternCase) {
  for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-2.0, 3.5}, std::pair{10.0, 10.5}}) {
    const Instance inst = interleaved(a, b);
    const PeriodicSolution sol = solve(inst, 4, PointRef::term(1));
    EXPECT_EQ(sol.solution_case, SolutionCase::PeriodicPattern);
    EXPECT_EQ(sol.period, 2u);
    const PointRef expect[] = {PointRef::lower(), PointRef::upper(), PointRef::lower(), PointRef::upper()};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(distance(inst.space(), sol.limits[i], expect[i]), 1e-7);
    EXPECT_LE(sol.residual, 1e-7);
  }
}

TEST(Solve, PropagatesEngineErrors) {
  const Instance cycle(FiniteSpace::discrete(4), TableMap({1, 2, 3, 0}));
  SolveOptions opts;
  opts.max_outer = 100;
  EXPECT_THROW(solve(cycle, 2, PointRef::index(0), opts), NotConvergedError);
  EXPECT_THROW(solve(cycle, 0, PointRef::index(0)), Error);
  EXPECT_THROW(solve(cycle, 2, PointRef::index(7)), Error);

  // The limits of the alternating space sit 1 apart; a cluster tolerance of
  // 2 merges them, and the order-1 check then sees T a = b far from a.
  SolveOptions coarse;
  coarse.cluster_tol = 2.0;
  coarse.residual_tol = 1e-7;
  try {
    solve(alternating(), 2, PointRef::term(1), coarse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConsistencyViolation);
  }
}

TEST(Solve, ResolvesAsTheDefaultToleranceLadderSays) {
  const SolveOptions defaults;
  EXPECT_EQ(defaults.tol, 1e-10);
  EXPECT_EQ(defaults.cluster_tol, 1e-7);
  EXPECT_EQ(defaults.effective_residual_tol(), 1e-7);
  EXPECT_EQ(defaults.max_outer, 100000u);
}

TEST(Divisors, AreSortedAndComplete) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(divisors(16), (std::vector<std::uint64_t>{1, 2, 4, 8, 16}));
  EXPECT_EQ(divisors(13), (std::vector<std::uint64_t>{1, 13}));
}

// Random finite contractions: divisor law, exact residuals, the consistency
// chain, start invariance and geometric decay inside each subsequence.
TEST(SolverProperties, OnRandomFiniteContractions) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Instance inst = random_instance(seed, 8);
    const std::size_t size = inst.finite_space()->size();
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const ContractionReport report = alpha_exact(inst, n);
      if (report.verdict != Verdict::Contraction) continue;
      ++checked;
      for (std::size_t x = 0; x < size; ++x) {
        const PointRef start = PointRef::index(x);
        const PeriodicSolution sol = solve(inst, n, start);
        ASSERT_EQ(n % sol.period, 0u);
        ASSERT_EQ(sol.residual, 0.0);
        if (n == 1) ASSERT_EQ(apply(inst, sol.representative), sol.representative);
        for (std::size_t i = 0; i < n; ++i) {
          ASSERT_EQ(apply(inst, sol.limits[i]), sol.limits[(i + 1) % n]);
        }
        const PeriodicSolution shifted = solve(inst, n, apply(inst, start));
        ASSERT_EQ(std::set(sol.cycle.begin(), sol.cycle.end()), std::set(shifted.cycle.begin(), shifted.cycle.end()));

        const auto states = advance_subsequences(inst, n, start, 1000, 1e-10);
        for (const auto& s : states) {
          for (std::size_t k = 2; k < s.terms.size(); ++k) {
            const auto& space = *inst.finite_space();
            const Rational before = space.exact(s.terms[k - 2].value(), s.terms[k - 1].value());
            const Rational after = space.exact(s.terms[k - 1].value(), s.terms[k].value());
            ASSERT_LE(after, report.alpha_min_exact * before);
          }
          // Convergent subsequences on a finite space end constant.
          ASSERT_EQ(s.terms.back(), s.terms[s.terms.size() - 2]);
        }
      }
    }
  }
  EXPECT_GT(checked, 50u);
}

}  // namespace
}  // namespace gperiod
