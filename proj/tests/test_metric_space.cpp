#include <gtest/gtest.h>

#include <cmath>

#include "gperiod/error.hpp"
#include "gperiod/finite_oracle.hpp"
#include "gperiod/metric_space.hpp"
#include "test_support.hpp"

namespace gperiod {
namespace {

DistanceMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  DistanceMatrix m;
  for (auto row : rows) {
    auto& r = m.emplace_back();
    for (long v : row) r.emplace_back(v);
  }
  return m;
}

TEST(ValidateFinite, DiscreteFivePointSpaceIsAMetric) {
  DistanceMatrix m(5, std::vector<Rational>(5, Rational(1)));
  for (int i = 0; i < 5; ++i) m[i][i] = 0;
  EXPECT_TRUE(validate_finite(m).ok());
}

TEST(ValidateFinite, SingletonIsAMetric) { EXPECT_TRUE(validate_finite(matrix({{0}})).ok()); }

TEST(ValidateFinite, ReportsTriangleWitness) {
  const auto v = validate_finite(matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
  EXPECT_EQ(v.issue, MetricIssue::TriangleViolation);
  EXPECT_EQ(v.where, (std::array<std::size_t, 3>{0, 2, 1}));
}

TEST(ValidateFinite, NamesTheFirstViolatedAxiom) {
  EXPECT_EQ(validate_finite({}).issue, MetricIssue::Empty);
  EXPECT_EQ(validate_finite(matrix({{0, 1}, {1}})).issue, MetricIssue::NonSquare);
  EXPECT_EQ(validate_finite(matrix({{0, -1}, {-1, 0}})).issue, MetricIssue::NegativeEntry);
  EXPECT_EQ(validate_finite(matrix({{1, 1}, {1, 0}})).issue, MetricIssue::IdentityViolation);
  EXPECT_EQ(validate_finite(matrix({{0, 0}, {0, 0}})).issue, MetricIssue::IdentityViolation);
  const auto sym = validate_finite(matrix({{0, 1}, {2, 0}}));
  EXPECT_EQ(sym.issue, MetricIssue::SymmetryViolation);
  EXPECT_EQ(sym.where[0], 0u);
  EXPECT_EQ(sym.where[1], 1u);
}

TEST(ValidateFinite, TriangleCheckIsExact) {
  // 1/3 + 1/3 + 1/3 sits exactly on the boundary; floating point would wobble.
  DistanceMatrix m(3, std::vector<Rational>(3));
  m[0][1] = m[1][0] = Rational(1, 3);
  m[1][2] = m[2][1] = Rational(1, 3);
  m[0][2] = m[2][0] = Rational(2, 3);
  EXPECT_TRUE(validate_finite(m).ok());
  m[0][2] = m[2][0] = Rational(2, 3) + Rational(1, 1000000000) * Rational(1, 1000000000);
  EXPECT_EQ(validate_finite(m).issue, MetricIssue::TriangleViolation);
}

TEST(FiniteSpace, RejectsBadInput) {
  EXPECT_THROW(FiniteSpace({"a", "b"}, matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}})), Error);
  EXPECT_THROW(FiniteSpace({"a", "a"}, matrix({{0, 1}, {1, 0}})), Error);
  EXPECT_THROW(FiniteSpace({"a"}, matrix({{0, 1}, {1, 0}})), Error);
}

TEST(Distance, ExamplesFromTheWorkedSpaces) {
  const SpaceModel discrete = FiniteSpace::discrete(5);
  EXPECT_EQ(exact_distance(discrete, PointRef::index(0), PointRef::index(3)), Rational(1));

  // x_1 = -1/2 and x_2 = 1 + 1/4.
  const SpaceModel alt = SequenceSpace(SequenceFamily::Alternating, 0.0, 1.0);
  EXPECT_EQ(exact_distance(alt, PointRef::term(1), PointRef::term(2)), Rational(7, 4));
  EXPECT_DOUBLE_EQ(distance(alt, PointRef::term(1), PointRef::term(2)), 1.75);
  EXPECT_EQ(distance(alt, PointRef::term(5), PointRef::term(5)), 0.0);
  EXPECT_EQ(distance(alt, PointRef::lower(), PointRef::upper()), 1.0);
}

TEST(Distance, InvalidPointsAreRejected) {
  const SpaceModel discrete = FiniteSpace::discrete(3);
  EXPECT_THROW(distance(discrete, PointRef::index(3), PointRef::index(0)), Error);
  EXPECT_THROW(distance(discrete, PointRef::lower(), PointRef::index(0)), Error);
  const SpaceModel alt = SequenceSpace(SequenceFamily::Alternating, 0.0, 1.0);
  EXPECT_THROW(distance(alt, PointRef::term(0), PointRef::lower()), Error);
  EXPECT_THROW(distance(alt, PointRef::index(0), PointRef::lower()), Error);
}

TEST(NthPoint, FollowsTheGeneratingFormulas) {
  const SequenceSpace alt(SequenceFamily::Alternating, 0.0, 1.0);
  EXPECT_EQ(alt.coordinate(nth_point(alt, 1)), -0.5);
  EXPECT_EQ(alt.coordinate(nth_point(alt, 2)), 1.25);
  EXPECT_EQ(alt.coordinate(nth_point(alt, 3)), -0.125);

  const SequenceSpace inter(SequenceFamily::Interleaved, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(inter.coordinate(nth_point(inter, 3)), -1.0 / 3.0);
  EXPECT_EQ(inter.coordinate(nth_point(inter, 1)), -0.5);
  EXPECT_EQ(inter.coordinate(nth_point(inter, 2)), 1.5);
  EXPECT_DOUBLE_EQ(inter.coordinate(nth_point(inter, 4)), 1.0 + 1.0 / 3.0);
  EXPECT_EQ(inter.coordinate(nth_point(inter, 5)), -0.25);
  EXPECT_DOUBLE_EQ(inter.coordinate(nth_point(inter, 7)), -1.0 / 9.0);

  EXPECT_THROW(nth_point(alt, 0), Error);
}

TEST(SequenceSpace, RequiresOrderedFiniteParameters) {
  EXPECT_THROW(SequenceSpace(SequenceFamily::Alternating, 1.0, 1.0), Error);
  EXPECT_THROW(SequenceSpace(SequenceFamily::Interleaved, 2.0, 1.0), Error);
  EXPECT_THROW(SequenceSpace(SequenceFamily::Alternating, 0.0, INFINITY), Error);
}

TEST(SequenceSpace, AlternatingTermsStraddleTheGapMonotonically) {
  for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-3.0, 7.5}, std::pair{100.0, 100.25}}) {
    const SequenceSpace s(SequenceFamily::Alternating, a, b);
    for (std::uint64_t n = 1; n <= 60; ++n) {
      const double x = s.coordinate(PointRef::term(n));
      const double next_same = s.coordinate(PointRef::term(n + 2));
      if (n % 2 == 1) {
        EXPECT_LT(s.exact_distance(PointRef::term(n + 2), PointRef::lower()),
                  s.exact_distance(PointRef::term(n), PointRef::lower()));
        EXPECT_LE(x, a);
        EXPECT_LE(x, next_same);
      } else {
        EXPECT_LT(s.exact_distance(PointRef::term(n + 2), PointRef::upper()),
                  s.exact_distance(PointRef::term(n), PointRef::upper()));
        EXPECT_GE(x, b);
        EXPECT_GE(x, next_same);
      }
      // Strictly below a / above b, measured exactly.
      EXPECT_GT(s.exact_distance(PointRef::term(n), n % 2 ? PointRef::lower() : PointRef::upper()), 0);
    }
  }
}

TEST(SequenceSpace, DistanceAgreesWithExactValue) {
  const SequenceSpace s(SequenceFamily::Interleaved, -1.0, 2.0);
  for (std::uint64_t i = 1; i <= 40; ++i) {
    for (std::uint64_t j = 1; j <= 40; ++j) {
      const double exact = s.exact_distance(PointRef::term(i), PointRef::term(j)).get_d();
      EXPECT_NEAR(s.distance(PointRef::term(i), PointRef::term(j)), exact, 1e-15 * (1.0 + exact));
    }
  }
}

// Symmetry and identity on every model, checked exactly.
TEST(MetricAxioms, HoldOnSequenceSpacePoints) {
  for (auto family : {SequenceFamily::Alternating, SequenceFamily::Interleaved}) {
    const SpaceModel s = SequenceSpace(family, 0.0, 1.0);
    std::vector<PointRef> pts{PointRef::lower(), PointRef::upper()};
    for (std::uint64_t n = 1; n <= 30; ++n) pts.push_back(PointRef::term(n));
    for (PointRef x : pts) {
      for (PointRef y : pts) {
        const Rational d = exact_distance(s, x, y);
        EXPECT_EQ(d, exact_distance(s, y, x));
        EXPECT_EQ(sgn(d) == 0, x == y);
        for (PointRef z : {PointRef::lower(), PointRef::upper(), PointRef::term(3), PointRef::term(8)}) {
          EXPECT_LE(d, exact_distance(s, x, z) + exact_distance(s, z, y));
        }
      }
    }
  }
}

TEST(MetricAxioms, GeneratorAlwaysProducesAMetric) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Instance inst = random_instance(seed, 12);
    ASSERT_TRUE(validate_finite(inst.finite_space()->matrix()).ok()) << "seed " << seed;
  }
}

}  // namespace
}  // namespace gperiod
