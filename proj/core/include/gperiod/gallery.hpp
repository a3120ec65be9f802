#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gperiod/contraction.hpp"
#include "gperiod/finite_oracle.hpp"
#include "gperiod/periodic_solver.hpp"

namespace gperiod {

/// Built-in worked instances: a five-point discrete space with a 2-cycle and
/// a 3-cycle (example_2_2), the alternating and interleaved sequence spaces
/// (example_2_3, example_2_4), and finite maps whose second iterate is a
/// Banach, Kannan or Chatterjea contraction (example_2_5).
enum class GalleryId { Example22, Example23, Example24, Example25 };

std::string_view to_string(GalleryId id) noexcept;
/// Throws Error(UnknownId).
GalleryId parse_gallery_id(std::string_view text);

struct GalleryParams {
  double a = 0.0;
  double b = 1.0;
};

// Expectation records. A tolerance of 0 means exact equality.

struct OrderExpectation {
  std::uint64_t order = 1;
  bool holds = false;
  std::optional<Verdict> verdict;
  std::optional<double> alpha_min;
  double alpha_tol = 0.0;
  std::optional<double> alpha_at_least;
  bool all_trivial = false;
};

struct PointRatioExpectation {
  std::uint64_t order = 1;
  PointRef point = PointRef::lower();
  double expected = 0.0;
  double tol = 0.0;
};

struct ProbeExpectation {
  std::uint64_t order = 1;
  std::string selector_name;
  SubsequenceSelector selector;
  std::uint64_t k = 1;
  double expected = 0.0;
  double tol = 0.0;
};

struct SolveExpectation {
  std::uint64_t order = 1;
  PointRef start = PointRef::index(0);
  std::uint64_t period = 1;
  SolutionCase solution_case = SolutionCase::AllEqual;
  /// When nonempty, limits[i] must lie within limit_tol of these points.
  std::vector<PointRef> limits_near;
  double limit_tol = 0.0;
};

struct PeriodExpectation {
  PointRef point = PointRef::index(0);
  std::uint64_t period = 1;
};

struct OracleExpectation {
  std::uint64_t order = 1;
  std::vector<PeriodicPoint> periodic;
  std::size_t orbit_count = 0;
};

struct ClassExpectation {
  std::uint64_t order = 1;
  ContractionClass cls = ContractionClass::Banach;
  double alpha = 0.5;
};

struct Expectations {
  std::vector<OrderExpectation> orders;
  std::vector<PointRatioExpectation> point_ratios;
  std::vector<ProbeExpectation> probes;
  std::vector<SolveExpectation> solves;
  std::vector<PeriodExpectation> periods;
  std::vector<OracleExpectation> oracles;
  std::vector<ClassExpectation> classes;
};

struct GalleryInstance {
  std::string label;
  Instance instance;
  Expectations expected;
};

struct GalleryCase {
  GalleryId id = GalleryId::Example22;
  GalleryParams params;
  std::vector<GalleryInstance> instances;
};

/// Throws Error(BadParams) when a sequence example gets a >= b.
GalleryCase build_case(GalleryId id, const GalleryParams& params = {});

struct CheckOutcome {
  std::string instance;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GalleryReport {
  GalleryId id = GalleryId::Example22;
  GalleryParams params;
  std::vector<CheckOutcome> checks;

  bool pass() const noexcept;
};

using ReportSink = std::function<void(const CheckOutcome&)>;

/// Runs the analyzer, solver and (for finite spaces) oracle against every
/// expectation of the case. Engine errors propagate.
GalleryReport run_gallery(const GalleryCase& gallery_case, const ReportSink& sink = {});

/// The instances used for example_2_5, exposed for tests.
Instance banach_square_instance();
Instance kannan_square_instance();
Instance chatterjea_square_instance();

}  // namespace gperiod
