#include "gperiod/self_map.hpp"

#include <limits>
#include <string>

#include "gperiod/error.hpp"

namespace gperiod {

TableMap TableMap::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return TableMap(std::move(images));
}

TableMap TableMap::constant(std::size_t n, std::size_t value) {
  return TableMap(std::vector<std::size_t>(n, value));
}

Instance::Instance(SpaceModel space, MapModel map) : space_(std::move(space)), map_(std::move(map)) {
  if (const auto* f = finite_space()) {
    const auto* t = table();
    if (t == nullptr) throw Error(ErrorCode::InvalidMap, "a finite space needs a lookup-table map");
    if (t->size() != f->size()) {
      throw Error(ErrorCode::InvalidMap, "map table has " + std::to_string(t->size()) +
                                             " entries for a space of " + std::to_string(f->size()) +
                                             " points");
    }
    for (std::size_t i = 0; i < t->size(); ++i) {
      if ((*t)(i) >= f->size()) {
        throw Error(ErrorCode::InvalidMap, "image of point " + std::to_string(i) + " is outside the space");
      }
    }
  } else if (!std::holds_alternative<ShiftMap>(map_)) {
    throw Error(ErrorCode::InvalidMap, "a sequence space carries the shift map");
  }
}

PointRef apply(const Instance& inst, PointRef x) {
  require_point(inst.space(), x);
  if (const auto* t = inst.table()) return PointRef::index((*t)(x.value()));
  switch (x.kind()) {
    case PointRef::Kind::Lower: return PointRef::upper();
    case PointRef::Kind::Upper: return PointRef::lower();
    default:
      if (x.value() == std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorCode::InvalidPoint, "term index overflow");
      }
      return PointRef::term(x.value() + 1);
  }
}

PointRef iterate(const Instance& inst, PointRef x, std::uint64_t k) {
  require_point(inst.space(), x);
  for (std::uint64_t i = 0; i < k; ++i) x = apply(inst, x);
  return x;
}

OrbitTrace orbit(const Instance& inst, PointRef x, std::size_t len) {
  if (len == 0) throw Error(ErrorCode::BadParams, "orbit length must be positive");
  require_point(inst.space(), x);
  OrbitTrace trace;
  trace.start = x;
  trace.points.reserve(len);
  trace.step_dists.reserve(len - 1);
  trace.points.push_back(x);
  for (std::size_t k = 1; k < len; ++k) {
    const PointRef next = apply(inst, trace.points.back());
    trace.step_dists.push_back(distance(inst.space(), trace.points.back(), next));
    trace.points.push_back(next);
  }
  return trace;
}

bool same_point(const SpaceModel& space, PointRef x, PointRef y, double tol) {
  if (is_finite(space)) {
    require_point(space, x);
    require_point(space, y);
    return x == y;
  }
  return distance(space, x, y) <= tol;
}

std::optional<std::uint64_t> prime_period(const Instance& inst, PointRef x, std::uint64_t max_p,
                                          double tol) {
  if (max_p == 0) throw Error(ErrorCode::BadParams, "max period must be positive");
  PointRef y = x;
  for (std::uint64_t p = 1; p <= max_p; ++p) {
    y = apply(inst, y);
    if (same_point(inst.space(), x, y, tol)) return p;
  }
  return std::nullopt;
}

}  // namespace gperiod

namespace gperiod {

TableMap power(const TableMap& map, std::uint64_t n) {
  std::vector<std::size_t> images(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::size_t y = i;
    for (std::uint64_t k = 0; k < n; ++k) y = map(y);
    images[i] = y;
  }
  return TableMap(std::move(images));
}

}  // namespace gperiod
