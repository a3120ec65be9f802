#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gperiod/rational.hpp"
#include "gperiod/self_map.hpp"

namespace gperiod {

/// Both sides of d(T^n x, T^2n x) <= alpha d(x, T^n x) at one point.
/// `value` is empty when the point satisfies the inequality trivially
/// (d(x, T^n x) = 0, which forces the left side to 0 as well).
struct RatioSample {
  PointRef point = PointRef::index(0);
  std::uint64_t order = 1;
  double numer = 0.0;
  double denom = 0.0;
  std::optional<double> value;

  bool trivially_satisfied() const noexcept { return !value.has_value(); }
};

/// The same two sides, exactly.
struct ExactRatio {
  Rational numer;
  Rational denom;

  bool trivially_satisfied() const { return sgn(denom) == 0; }
  /// numer / denom, or 0 for a trivially satisfied point.
  Rational value() const;
};

enum class Verdict { Contraction, NotContraction, InconclusiveSampled };

struct ContractionReport {
  std::uint64_t order = 1;
  std::vector<RatioSample> samples;
  /// Supremum of the ratios over the examined points, rounded toward zero.
  double alpha_min = 0.0;
  /// The same supremum before rounding.
  Rational alpha_min_exact;
  /// True iff every point of a finite space was examined.
  bool exact = false;
  Verdict verdict = Verdict::Contraction;
  /// A point with ratio >= 1 when the verdict is NotContraction.
  std::optional<PointRef> witness;
  std::size_t trivially_satisfied = 0;
};

/// A sampled supremum in [1 - margin, 1) is never certified.
inline constexpr double kSampledMargin = 1e-3;
inline constexpr std::uint64_t kDefaultIndexSample = 200;

ExactRatio exact_ratio(const Instance& inst, std::uint64_t order, PointRef x);

/// Throws Error(BadParams) for order 0 and Error(InvalidPoint).
RatioSample ratio(const Instance& inst, std::uint64_t order, PointRef x);

/// Exhaustive check over a finite space. Throws Error(BadParams) for a
/// sequence-space instance.
ContractionReport alpha_exact(const Instance& inst, std::uint64_t order);

/// Evaluates a, b and x_1..x_{index_cap} of a sequence space. The verdict is
/// labelled as sampled; an infinite space is never certified exhaustively.
ContractionReport alpha_sampled(const Instance& inst, std::uint64_t order,
                                std::uint64_t index_cap = kDefaultIndexSample);

/// alpha_exact for finite instances, alpha_sampled otherwise.
ContractionReport analyze(const Instance& inst, std::uint64_t order,
                          std::uint64_t index_cap = kDefaultIndexSample);

/// Maps k = 1, 2, ... to a term index n_k.
using SubsequenceSelector = std::function<std::uint64_t(std::uint64_t)>;

/// Ratio at the k-th selected term x_{n_k}; 0 if that point is trivially
/// satisfied.
double ratio_limit_probe(const Instance& inst, std::uint64_t order,
                         const SubsequenceSelector& selector, std::uint64_t k);

enum class ContractionClass { Banach, Kannan, Chatterjea };

struct ClassCheck {
  bool holds = false;
  /// A pair (x, y) violating the class inequality for T^n.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  Rational alpha;
  /// The graphic-contraction constant implied for order n: alpha for Banach,
  /// alpha / (1 - alpha) for Kannan and Chatterjea (substitute y = T^n x and
  /// isolate d(T^n x, T^2n x)).
  Rational effective_graphic_alpha;
  /// Smallest alpha for which the class inequality holds; empty when no
  /// finite constant works.
  std::optional<Rational> tightest;
  /// alpha_min from alpha_exact at the same order; filled when holds.
  std::optional<Rational> graphic_alpha_min;
};

/// Exhaustive pair check of the class inequality for T^n on a finite space.
/// Throws Error(BadParams) unless 0 < alpha < 1 and the instance is finite.
ClassCheck check_iterated_class(const Instance& inst, std::uint64_t order, ContractionClass cls,
                                double alpha);

}  // namespace gperiod

namespace gperiod {

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(ContractionClass c) noexcept;

}  // namespace gperiod
