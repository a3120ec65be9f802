#include "gperiod/periodic_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gperiod/error.hpp"

namespace gperiod {

double cauchy_tail_bound(double d1, double gamma, std::uint64_t k) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 1)");
  }
  if (!(d1 >= 0.0)) throw Error(ErrorCode::BadParams, "d1 must be non-negative");
  if (k == 0) throw Error(ErrorCode::BadParams, "k must be positive");
  if (d1 == 0.0) return 0.0;
  return std::pow(gamma, static_cast<double>(k - 1)) * d1 / (1.0 - gamma);
}

TailBoundDetector::TailBoundDetector(double tol)
    : tol_(tol), tail_bound_(std::numeric_limits<double>::infinity()) {
  if (!(tol > 0.0)) throw Error(ErrorCode::BadParams, "tolerance must be positive");
}

bool TailBoundDetector::observe(double step) {
  ++steps_;
  if (constant_) return true;
  if (step == 0.0) {
    constant_ = true;
    converged_ = true;
    last_step_ = 0.0;
    tail_bound_ = 0.0;
    return true;
  }
  if (steps_ > 1) {
    ratios_[ratio_count_ % kWindow] = step / last_step_;
    ++ratio_count_;
  }
  last_step_ = step;
  if (ratio_count_ == 0) return false;

  const std::size_t filled = std::min(ratio_count_, kWindow);
  const double worst = *std::max_element(ratios_.begin(), ratios_.begin() + filled);
  gamma_hat_ = std::clamp(worst, 0.0, kGammaCeiling);
  // Distance from the newest term to the limit: the tail starting one step later.
  tail_bound_ = cauchy_tail_bound(step, gamma_hat_, 2);
  converged_ = tail_bound_ < tol_;
  return converged_;
}

std::vector<SubsequenceState> advance_subsequences(const Instance& inst, std::uint64_t order,
                                                   PointRef start, std::uint64_t max_outer, double tol) {
  if (order == 0) throw Error(ErrorCode::BadParams, "order must be a positive integer");
  if (max_outer == 0) throw Error(ErrorCode::BadParams, "max_outer must be positive");
  require_point(inst.space(), start);

  std::vector<SubsequenceState> states(order);
  std::vector<TailBoundDetector> detectors(order, TailBoundDetector(tol));
  PointRef seed = start;
  for (std::size_t i = 0; i < order; ++i) {
    if (i > 0) seed = apply(inst, seed);
    states[i].residue = i + 1;
    states[i].terms.push_back(seed);
  }

  // Lockstep: every subsequence stops at the same depth k, so the limits are
  // the consecutive orbit points x_{nk+1}, ..., x_{nk+n}.
  for (std::uint64_t outer = 0; outer < max_outer; ++outer) {
    bool all_converged = true;
    for (std::size_t i = 0; i < order; ++i) {
      const PointRef current = states[i].terms.back();
      const PointRef next = iterate(inst, current, order);
      states[i].terms.push_back(next);
      all_converged = detectors[i].observe(distance(inst.space(), current, next)) && all_converged;
    }
    if (all_converged) break;
  }

  for (std::size_t i = 0; i < order; ++i) {
    SubsequenceState& state = states[i];
    state.last_step = detectors[i].last_step();
    state.gamma_hat = detectors[i].gamma_hat();
    state.converged = detectors[i].converged();
    if (state.converged) state.limit = state.terms.back();
  }

  for (const auto& state : states) {
    if (!state.converged) throw NotConvergedError(state.residue, state.last_step, state.gamma_hat);
  }
  return states;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t q = 1; q * q <= n; ++q) {
    if (n % q != 0) continue;
    small.push_back(q);
    if (q != n / q) large.push_back(n / q);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

LimitClassification classify_limits(const SpaceModel& space, const std::vector<PointRef>& limits,
                                    double cluster_tol) {
  const std::size_t n = limits.size();
  if (n == 0) throw Error(ErrorCode::BadParams, "no limits to classify");

  std::optional<std::uint64_t> period;
  for (std::uint64_t q : divisors(n)) {
    bool shift_invariant = true;
    for (std::size_t i = 0; i < n && shift_invariant; ++i) {
      shift_invariant = distance(space, limits[i], limits[(i + q) % n]) <= cluster_tol;
    }
    if (shift_invariant) {
      period = q;
      break;
    }
  }
  if (!period) {
    throw Error(ErrorCode::ToleranceAmbiguity, "no divisor of the order is a period of the limits");
  }

  const std::uint64_t p = *period;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (distance(space, limits[i], limits[j]) <= cluster_tol) {
        std::ostringstream os;
        os << "limits " << i + 1 << " and " << j + 1 << " coincide within one period of length " << p
           << "; cluster tolerance " << cluster_tol << " does not separate the limits";
        throw Error(ErrorCode::ToleranceAmbiguity, os.str());
      }
    }
  }

  LimitClassification out;
  out.period = p;
  if (p == 1) {
    out.solution_case = SolutionCase::AllEqual;
  } else if (p == n) {
    out.solution_case = SolutionCase::AllDistinct;
  } else {
    out.solution_case = SolutionCase::PeriodicPattern;
  }
  return out;
}

PeriodicSolution solve(const Instance& inst, std::uint64_t order, PointRef start, const SolveOptions& options) {
  if (!(options.cluster_tol > 0.0) || !(options.effective_residual_tol() > 0.0)) {
    throw Error(ErrorCode::BadParams, "tolerances must be positive");
  }
  const auto states = advance_subsequences(inst, order, start, options.max_outer, options.tol);

  PeriodicSolution sol;
  sol.order = order;
  for (const auto& s : states) {
    sol.limits.push_back(*s.limit);
    sol.iterations_used = std::max<std::uint64_t>(sol.iterations_used, s.terms.size() - 1);
  }

  const auto cls = classify_limits(inst.space(), sol.limits, options.cluster_tol);
  sol.solution_case = cls.solution_case;
  sol.period = cls.period;

  const SpaceModel& space = inst.space();
  const double residual_tol = options.effective_residual_tol();
  for (std::size_t i = 0; i < order; ++i) {
    const double gap = distance(space, apply(inst, sol.limits[i]), sol.limits[(i + 1) % order]);
    if (gap > residual_tol) {
      std::ostringstream os;
      os << "T maps limit " << i + 1 << " to distance " << gap << " from limit " << (i + 1) % order + 1;
      throw Error(ErrorCode::ConsistencyViolation, os.str());
    }
  }

  sol.representative = sol.limits.front();
  sol.residual = distance(space, iterate(inst, sol.representative, sol.period), sol.representative);
  if (sol.residual > residual_tol) {
    throw Error(ErrorCode::ConsistencyViolation, "representative does not return to itself after p steps");
  }
  for (std::uint64_t q : divisors(order)) {
    if (q >= sol.period) break;
    if (distance(space, iterate(inst, sol.representative, q), sol.representative) <= residual_tol) {
      throw Error(ErrorCode::ConsistencyViolation,
                  "representative returns to itself after " + std::to_string(q) +
                      " steps, fewer than the classified period");
    }
  }

  sol.cycle.assign(sol.limits.begin(), sol.limits.begin() + static_cast<std::ptrdiff_t>(sol.period));
  return sol;
}

}  // namespace gperiod

namespace gperiod {

std::string_view to_string(SolutionCase c) noexcept {
  switch (c) {
    case SolutionCase::AllDistinct: return "A";
    case SolutionCase::AllEqual: return "B";
    case SolutionCase::PeriodicPattern: return "D";
  }
  return "?";
}

}  // namespace gperiod
