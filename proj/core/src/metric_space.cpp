#include "gperiod/metric_space.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "gperiod/error.hpp"

namespace gperiod {

std::string MetricValidation::describe() const {
  std::ostringstream os;
  const auto [i, j, k] = where;
  switch (issue) {
    case MetricIssue::None: return "ok";
    case MetricIssue::Empty: return "empty distance matrix";
    case MetricIssue::NonSquare: os << "row " << i << " has the wrong length"; break;
    case MetricIssue::NegativeEntry: os << "negative distance at (" << i << "," << j << ")"; break;
    case MetricIssue::IdentityViolation:
      if (i == j) {
        os << "nonzero self-distance at " << i;
      } else {
        os << "zero distance between distinct points " << i << " and " << j;
      }
      break;
    case MetricIssue::SymmetryViolation:
      os << "d(" << i << "," << j << ") != d(" << j << "," << i << ")";
      break;
    case MetricIssue::TriangleViolation:
      os << "triangle inequality fails: d(" << i << "," << j << ") > d(" << i << "," << k
         << ") + d(" << k << "," << j << ")";
      break;
  }
  return os.str();
}

MetricValidation validate_finite(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  if (n == 0) return {MetricIssue::Empty, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) return {MetricIssue::NonSquare, {i, 0, 0}};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(dist[i][j]) < 0) return {MetricIssue::NegativeEntry, {i, j, 0}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool zero = sgn(dist[i][j]) == 0;
      if ((i == j) != zero) return {MetricIssue::IdentityViolation, {i, j, 0}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) return {MetricIssue::SymmetryViolation, {i, j, 0}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t via = 0; via < n; ++via) {
        if (via == i || via == j) continue;
        if (dist[i][j] > dist[i][via] + dist[via][j]) {
          return {MetricIssue::TriangleViolation, {i, j, via}};
        }
      }
    }
  }
  return {};
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, DistanceMatrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  if (auto check = validate_finite(dist_); !check.ok()) {
    throw Error(ErrorCode::InvalidMetric, check.describe());
  }
  if (labels_.size() != dist_.size()) {
    throw Error(ErrorCode::BadParams, "label count does not match the distance matrix");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !seen.insert(l).second) {
      throw Error(ErrorCode::BadParams, "point labels must be nonempty and unique: '" + l + "'");
    }
  }
  const std::size_t n = size();
  approx_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) approx_[i * n + j] = dist_[i][j].get_d();
  }
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<std::string> labels;
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    dist[i][i] = 0;
  }
  return FiniteSpace(std::move(labels), std::move(dist));
}

std::optional<std::size_t> FiniteSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

SequenceSpace::SequenceSpace(SequenceFamily family, double a, double b, std::uint64_t index_cap)
    : family_(family), a_(a), b_(b), index_cap_(index_cap) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw Error(ErrorCode::BadParams, "sequence space requires finite a < b");
  }
  if (index_cap == 0) throw Error(ErrorCode::BadParams, "index cap must be positive");
  exact_a_ = exact_from_double(a);
  exact_b_ = exact_from_double(b);
}

bool SequenceSpace::contains(PointRef p) const noexcept {
  switch (p.kind()) {
    case PointRef::Kind::Lower:
    case PointRef::Kind::Upper: return true;
    case PointRef::Kind::Term: return p.value() >= 1;
    case PointRef::Kind::Index: return false;
  }
  return false;
}

SequenceSpace::Decomposed SequenceSpace::decompose(PointRef p) const {
  if (!contains(p)) throw Error(ErrorCode::InvalidPoint, "point does not belong to the sequence space");
  if (p.kind() == PointRef::Kind::Lower) return {false, 0, 0};
  if (p.kind() == PointRef::Kind::Upper) return {true, 0, 0};
  const std::uint64_t n = p.value();
  if (family_ == SequenceFamily::Alternating) {
    return {n % 2 == 0, 2, n};
  }
  const std::uint64_t residue = (n - 1) % 4;
  const std::uint64_t k = (n - 1) / 4 + 1;
  return {residue % 2 == 1, residue < 2 ? 2u : 3u, k};
}

double SequenceSpace::offset(const Decomposed& d) {
  if (d.base == 0) return 0.0;
  if (d.base == 2) {
    return d.power > 2000 ? 0.0 : std::ldexp(1.0, -static_cast<int>(d.power));
  }
  return d.power > 2000 ? 0.0 : std::pow(3.0, -static_cast<double>(d.power));
}

Rational SequenceSpace::exact_offset(const Decomposed& d) {
  if (d.base == 0) return Rational(0);
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), d.base, d.power);
  return Rational(mpz_class(1), denom);
}

double SequenceSpace::coordinate(PointRef p) const {
  const auto d = decompose(p);
  return d.above ? b_ + offset(d) : a_ - offset(d);
}

double SequenceSpace::distance(PointRef x, PointRef y) const {
  const auto dx = decompose(x);
  const auto dy = decompose(y);
  // Subtract offsets directly on the same side to avoid cancellation against a or b.
  if (dx.above == dy.above) return std::abs(offset(dx) - offset(dy));
  return (b_ - a_) + offset(dx) + offset(dy);
}

Rational SequenceSpace::exact_distance(PointRef x, PointRef y) const {
  const auto dx = decompose(x);
  const auto dy = decompose(y);
  if (dx.above == dy.above) return abs(Rational(exact_offset(dx) - exact_offset(dy)));
  return Rational((exact_b_ - exact_a_) + exact_offset(dx) + exact_offset(dy));
}

PointRef nth_point(const SequenceSpace&, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::BadParams, "sequence terms are indexed from 1");
  return PointRef::term(n);
}

bool contains(const SpaceModel& space, PointRef p) noexcept {
  if (const auto* f = std::get_if<FiniteSpace>(&space)) {
    return p.kind() == PointRef::Kind::Index && p.value() < f->size();
  }
  return std::get<SequenceSpace>(space).contains(p);
}

void require_point(const SpaceModel& space, PointRef p) {
  if (!contains(space, p)) throw Error(ErrorCode::InvalidPoint, "point does not belong to the space");
}

double distance(const SpaceModel& space, PointRef x, PointRef y) {
  require_point(space, x);
  require_point(space, y);
  if (const auto* f = std::get_if<FiniteSpace>(&space)) return f->distance(x.value(), y.value());
  return std::get<SequenceSpace>(space).distance(x, y);
}

Rational exact_distance(const SpaceModel& space, PointRef x, PointRef y) {
  require_point(space, x);
  require_point(space, y);
  if (const auto* f = std::get_if<FiniteSpace>(&space)) return f->exact(x.value(), y.value());
  return std::get<SequenceSpace>(space).exact_distance(x, y);
}

bool is_finite(const SpaceModel& space) noexcept {
  return std::holds_alternative<FiniteSpace>(space);
}

std::string point_label(const SpaceModel& space, PointRef p) {
  require_point(space, p);
  if (const auto* f = std::get_if<FiniteSpace>(&space)) return f->label(p.value());
  switch (p.kind()) {
    case PointRef::Kind::Lower: return "a";
    case PointRef::Kind::Upper: return "b";
    default: return "x_" + std::to_string(p.value());
  }
}

std::optional<double> point_coordinate(const SpaceModel& space, PointRef p) {
  require_point(space, p);
  if (const auto* s = std::get_if<SequenceSpace>(&space)) return s->coordinate(p);
  return std::nullopt;
}

}  // namespace gperiod
