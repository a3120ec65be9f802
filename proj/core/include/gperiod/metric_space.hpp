#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gperiod/rational.hpp"

namespace gperiod {

/// Handle to a point of one particular space model. Finite spaces address
/// points by index; sequence spaces address the two accumulation points and
/// the terms x_n symbolically, so the map and the distance can be evaluated
/// without round-off in the point identity.
class PointRef {
 public:
  enum class Kind : std::uint8_t { Index, Lower, Upper, Term };

  static constexpr PointRef index(std::size_t i) noexcept { return {Kind::Index, i}; }
  /// The accumulation point a of a sequence space.
  static constexpr PointRef lower() noexcept { return {Kind::Lower, 0}; }
  /// The accumulation point b of a sequence space.
  static constexpr PointRef upper() noexcept { return {Kind::Upper, 0}; }
  /// The term x_n (n >= 1) of a sequence space.
  static constexpr PointRef term(std::uint64_t n) noexcept { return {Kind::Term, n}; }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const PointRef&, const PointRef&) = default;

 private:
  constexpr PointRef(Kind kind, std::uint64_t value) noexcept : kind_(kind), value_(value) {}

  Kind kind_;
  std::uint64_t value_;
};

using DistanceMatrix = std::vector<std::vector<Rational>>;

enum class MetricIssue {
  None,
  Empty,
  NonSquare,
  NegativeEntry,
  IdentityViolation,
  SymmetryViolation,
  TriangleViolation,
};

/// Outcome of checking the metric axioms on a distance matrix. For a
/// triangle violation, `where` is (i, j, via) with d(i,j) > d(i,via) + d(via,j);
/// for the other issues only the leading entries are meaningful.
struct MetricValidation {
  MetricIssue issue = MetricIssue::None;
  std::array<std::size_t, 3> where{};

  bool ok() const noexcept { return issue == MetricIssue::None; }
  std::string describe() const;
};

/// Checks squareness, non-negativity, identity of indiscernibles, symmetry
/// and every triangle inequality, in that order, stopping at the first
/// violation. All comparisons are exact.
MetricValidation validate_finite(const DistanceMatrix& dist);

/// A finite metric space with exact rational distances.
class FiniteSpace {
 public:
  /// Throws Error(InvalidMetric) if the matrix fails validate_finite, or
  /// Error(BadParams) if labels are missing or duplicated.
  FiniteSpace(std::vector<std::string> labels, DistanceMatrix dist);

  /// Points x1..xN, all at mutual distance 1.
  static FiniteSpace discrete(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  const Rational& exact(std::size_t i, std::size_t j) const { return dist_.at(i).at(j); }
  double distance(std::size_t i, std::size_t j) const { return approx_.at(i * size() + j); }
  const DistanceMatrix& matrix() const noexcept { return dist_; }

 private:
  std::vector<std::string> labels_;
  DistanceMatrix dist_;
  std::vector<double> approx_;
};

/// The two countable real-line families: `Alternating` has
/// x_n = a - 2^-n for odd n and b + 2^-n for even n; `Interleaved` cycles
/// through four residue classes approaching a and b by powers of 1/2 and 1/3.
enum class SequenceFamily { Alternating, Interleaved };

/// Countable subset {a, b} ∪ {x_n} of the real line with the usual distance.
/// Only the generating formulas are stored.
class SequenceSpace {
 public:
  static constexpr std::uint64_t kDefaultIndexCap = 1'000'000;

  /// Throws Error(BadParams) unless a < b and both are finite.
  SequenceSpace(SequenceFamily family, double a, double b,
                std::uint64_t index_cap = kDefaultIndexCap);

  SequenceFamily family() const noexcept { return family_; }
  double lower() const noexcept { return a_; }
  double upper() const noexcept { return b_; }
  /// Largest term index that is materialized from user input or sampled.
  std::uint64_t index_cap() const noexcept { return index_cap_; }

  bool contains(PointRef p) const noexcept;
  double coordinate(PointRef p) const;
  double distance(PointRef x, PointRef y) const;
  Rational exact_distance(PointRef x, PointRef y) const;

 private:
  // Every point is a - offset (below a) or b + offset (above b).
  struct Decomposed {
    bool above;
    unsigned base;        // 2 or 3; 0 for the accumulation points
    std::uint64_t power;  // offset = base^-power
  };
  Decomposed decompose(PointRef p) const;
  static double offset(const Decomposed& d);
  static Rational exact_offset(const Decomposed& d);

  SequenceFamily family_;
  double a_;
  double b_;
  Rational exact_a_;
  Rational exact_b_;
  std::uint64_t index_cap_;
};

/// The term x_n of a sequence space; throws Error(BadParams) for n == 0.
PointRef nth_point(const SequenceSpace& space, std::uint64_t n);

using SpaceModel = std::variant<FiniteSpace, SequenceSpace>;

bool contains(const SpaceModel& space, PointRef p) noexcept;
/// d(x, y) in double precision. Throws Error(InvalidPoint).
double distance(const SpaceModel& space, PointRef x, PointRef y);
/// d(x, y) exactly. Throws Error(InvalidPoint).
Rational exact_distance(const SpaceModel& space, PointRef x, PointRef y);
bool is_finite(const SpaceModel& space) noexcept;

/// Human-readable name: the label for finite spaces, "a", "b" or "x_n" otherwise.
std::string point_label(const SpaceModel& space, PointRef p);
/// Real coordinate for sequence-space points, empty for finite spaces.
std::optional<double> point_coordinate(const SpaceModel& space, PointRef p);

/// Throws Error(InvalidPoint) when p does not belong to space.
void require_point(const SpaceModel& space, PointRef p);

}  // namespace gperiod
