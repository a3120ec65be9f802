#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gperiod/metric_space.hpp"

namespace gperiod {

/// Self-map of a finite space given by its full image table.
class TableMap {
 public:
  explicit TableMap(std::vector<std::size_t> images) : images_(std::move(images)) {}

  static TableMap identity(std::size_t n);
  static TableMap constant(std::size_t n, std::size_t value);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

 private:
  std::vector<std::size_t> images_;
};

/// x_n -> x_{n+1}, a -> b, b -> a on a sequence space.
struct ShiftMap {};

using MapModel = std::variant<TableMap, ShiftMap>;

/// A space together with a self-map of it. Construction checks that the map
/// really sends the space into itself.
class Instance {
 public:
  /// Throws Error(InvalidMap) when the map does not match the space.
  Instance(SpaceModel space, MapModel map);

  const SpaceModel& space() const noexcept { return space_; }
  const MapModel& map() const noexcept { return map_; }

  /// Non-null only for finite instances.
  const FiniteSpace* finite_space() const noexcept { return std::get_if<FiniteSpace>(&space_); }
  const TableMap* table() const noexcept { return std::get_if<TableMap>(&map_); }
  const SequenceSpace* sequence_space() const noexcept { return std::get_if<SequenceSpace>(&space_); }

 private:
  SpaceModel space_;
  MapModel map_;
};

/// Tx. Throws Error(InvalidPoint).
PointRef apply(const Instance& inst, PointRef x);

/// T^k x by repeated application; T^0 x = x.
PointRef iterate(const Instance& inst, PointRef x, std::uint64_t k);

/// x, Tx, T^2x, ... together with the consecutive distances.
struct OrbitTrace {
  PointRef start = PointRef::index(0);
  std::vector<PointRef> points;
  std::vector<double> step_dists;
};

/// Throws Error(BadParams) if len == 0.
OrbitTrace orbit(const Instance& inst, PointRef x, std::size_t len);

inline constexpr double kDefaultPeriodTolerance = 1e-9;

/// Least p <= max_p with T^p x = x, or nullopt. Equality is exact on finite
/// spaces and d(T^p x, x) <= tol on sequence spaces.
std::optional<std::uint64_t> prime_period(const Instance& inst, PointRef x, std::uint64_t max_p,
                                          double tol = kDefaultPeriodTolerance);

/// True when x and y coincide: exactly on finite spaces, within tol otherwise.
bool same_point(const SpaceModel& space, PointRef x, PointRef y, double tol);

}  // namespace gperiod

namespace gperiod {

/// Lookup table of T^n for a finite map.
TableMap power(const TableMap& map, std::uint64_t n);

}  // namespace gperiod
