#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gperiod/self_map.hpp"

namespace gperiod {

/// gamma^(k-1) * d1 / (1 - gamma): under d(x_{j+1}, x_j) <= gamma d(x_j, x_{j-1})
/// with d1 = d(x_1, x_2), an upper bound on d(x_k, x_{k+m}) for every m >= 1.
/// Throws Error(GammaOutOfRange) unless 0 <= gamma < 1, Error(BadParams) for
/// d1 < 0 or k == 0.
double cauchy_tail_bound(double d1, double gamma, std::uint64_t k);

/// Stopping rule for a sequence fed one step distance at a time.
///
/// The contraction factor is estimated as the largest of the last three
/// ratios of consecutive steps, clamped to [0, 1 - 1e-9]. The sequence is
/// declared converged once the geometric tail bound for the newest term
/// drops below the tolerance, or immediately when a step is exactly zero
/// (the sequence is constant from there on). A true ratio >= 1 keeps the
/// bound from shrinking, so such sequences never converge.
class TailBoundDetector {
 public:
  static constexpr std::size_t kWindow = 3;
  static constexpr double kGammaCeiling = 1.0 - 1e-9;

  explicit TailBoundDetector(double tol);

  /// Feeds d(s_k, s_{k+1}) and returns converged(). Feeding continues to
  /// refine the estimate after convergence.
  bool observe(double step);

  bool converged() const noexcept { return converged_; }
  bool constant() const noexcept { return constant_; }
  double last_step() const noexcept { return last_step_; }
  double gamma_hat() const noexcept { return gamma_hat_; }
  /// Bound on the distance from the newest term to the limit; infinite
  /// until a ratio has been observed.
  double tail_bound() const noexcept { return tail_bound_; }
  std::size_t steps() const noexcept { return steps_; }

 private:
  double tol_;
  std::array<double, kWindow> ratios_{};
  std::size_t ratio_count_ = 0;
  std::size_t steps_ = 0;
  double last_step_ = 0.0;
  double gamma_hat_ = 0.0;
  double tail_bound_;
  bool converged_ = false;
  bool constant_ = false;
};

/// One residue class s^i_k = x_{n(k-1)+i} of the orbit of the start point.
struct SubsequenceState {
  std::size_t residue = 1;  // 1-based
  std::vector<PointRef> terms;
  double last_step = 0.0;
  double gamma_hat = 0.0;
  bool converged = false;
  std::optional<PointRef> limit;
};

/// Advances the n residue subsequences of the orbit of `start`, each by T^n,
/// in lockstep until every TailBoundDetector accepts at the same depth or
/// max_outer steps elapse. Throws NotConvergedError for the first
/// subsequence that has not converged.
std::vector<SubsequenceState> advance_subsequences(const Instance& inst, std::uint64_t order,
                                                   PointRef start, std::uint64_t max_outer, double tol);

/// A: all n limits distinct (period n). B: all equal (fixed point).
/// D: the limits repeat with a period p that is a proper divisor of n.
enum class SolutionCase { AllDistinct, AllEqual, PeriodicPattern };

struct LimitClassification {
  SolutionCase solution_case = SolutionCase::AllEqual;
  std::uint64_t period = 1;
};

/// Smallest divisor p of n with d(limits[i], limits[i+p mod n]) <= cluster_tol
/// for all i, after which limits[0..p) must be pairwise farther apart than
/// cluster_tol. Throws Error(ToleranceAmbiguity) otherwise: a repeated limit
/// inside one period cannot happen for a continuous map, so it means the
/// tolerance does not separate the limits.
LimitClassification classify_limits(const SpaceModel& space, const std::vector<PointRef>& limits,
                                    double cluster_tol);

struct SolveOptions {
  double tol = 1e-10;
  double cluster_tol = 1e-7;
  /// Defaults to cluster_tol.
  std::optional<double> residual_tol;
  std::uint64_t max_outer = 100'000;

  double effective_residual_tol() const noexcept { return residual_tol.value_or(cluster_tol); }
};

struct PeriodicSolution {
  std::uint64_t order = 1;
  std::vector<PointRef> limits;
  SolutionCase solution_case = SolutionCase::AllEqual;
  std::uint64_t period = 1;
  PointRef representative = PointRef::index(0);
  double residual = 0.0;
  std::vector<PointRef> cycle;
  std::uint64_t iterations_used = 0;
};

/// Runs the residue-subsequence construction from `start`, classifies the
/// limits, and checks T x*_i = x*_{i+1} (cyclically), d(T^p x*_1, x*_1), and
/// that no smaller divisor of n already returns x*_1 to itself.
/// Throws NotConvergedError, Error(ToleranceAmbiguity) or
/// Error(ConsistencyViolation).
PeriodicSolution solve(const Instance& inst, std::uint64_t order, PointRef start,
                       const SolveOptions& options = {});

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace gperiod

namespace gperiod {

/// "A", "B" or "D".
std::string_view to_string(SolutionCase c) noexcept;

}  // namespace gperiod
