#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gperiod/periodic_solver.hpp"
#include "gperiod/self_map.hpp"

namespace gperiod {

struct PeriodicPoint {
  std::size_t point = 0;
  std::uint64_t period = 1;

  friend bool operator==(const PeriodicPoint&, const PeriodicPoint&) = default;
};

/// Exhaustive list of periodic points of a finite map.
struct OracleResult {
  std::uint64_t order = 1;
  std::vector<PeriodicPoint> periodic_points;
  /// Every listed period divides the order, and the list is nonempty
  /// whenever the map is a graphic contraction of that order.
  bool divisor_ok = true;
  /// Disjoint cycles, each listed from its smallest index along T.
  std::vector<std::vector<std::size_t>> orbits;
};

/// Tests T^p x = x exactly for every point and every divisor p of the order,
/// recording the least such p. With full_scan, every p in 1..|X| is tried
/// instead, exposing periodic points whose period does not divide the order.
/// Throws Error(BadParams) for sequence-space instances.
OracleResult enumerate_periodic(const Instance& inst, std::uint64_t order, bool full_scan = false);

/// A random finite instance with 2..max_points points: positive random edge
/// weights completed to a metric by all-pairs shortest paths (exactly), and
/// a uniformly random image table. Deterministic in the seed.
/// Throws Error(BadParams) unless 2 <= max_points <= 12.
Instance random_instance(std::uint64_t seed, std::size_t max_points);

struct CrosscheckResult {
  bool agree = false;
  std::string detail;
};

/// Agree iff the solver's representative is periodic for the oracle with the
/// same prime period and the solver's cycle is that point's orbit as a set.
CrosscheckResult crosscheck(const Instance& inst, std::uint64_t order, const PeriodicSolution& solution);

}  // namespace gperiod
