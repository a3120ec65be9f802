#include "gperiod/contraction.hpp"

#include <stdexcept>

#include "gperiod/error.hpp"

namespace gperiod {

namespace {

void require_order(std::uint64_t order) {
  if (order == 0) throw Error(ErrorCode::BadParams, "order must be a positive integer");
}

RatioSample to_sample(PointRef x, std::uint64_t order, const ExactRatio& r) {
  RatioSample s;
  s.point = x;
  s.order = order;
  s.numer = to_double_toward_zero(r.numer);
  s.denom = to_double_toward_zero(r.denom);
  if (!r.trivially_satisfied()) s.value = to_double_toward_zero(r.value());
  return s;
}

// Folds one point into a running report; `sup` tracks the exact supremum.
void accumulate(ContractionReport& report, PointRef x, const ExactRatio& r) {
  report.samples.push_back(to_sample(x, report.order, r));
  if (r.trivially_satisfied()) {
    ++report.trivially_satisfied;
    return;
  }
  const Rational v = r.value();
  if (v > report.alpha_min_exact) report.alpha_min_exact = v;
  if (!report.witness && v >= 1) report.witness = x;
}

void finish(ContractionReport& report, bool sampled) {
  report.alpha_min = to_double_toward_zero(report.alpha_min_exact);
  if (report.witness) {
    report.verdict = Verdict::NotContraction;
  } else if (sampled && report.alpha_min_exact >= Rational(1) - rational_from_decimal(kSampledMargin)) {
    report.verdict = Verdict::InconclusiveSampled;
  } else {
    report.verdict = Verdict::Contraction;
  }
}

}  // namespace

Rational ExactRatio::value() const {
  if (trivially_satisfied()) return Rational(0);
  return Rational(numer / denom);
}

ExactRatio exact_ratio(const Instance& inst, std::uint64_t order, PointRef x) {
  require_order(order);
  const PointRef tn = iterate(inst, x, order);
  const PointRef t2n = iterate(inst, tn, order);
  ExactRatio r{exact_distance(inst.space(), tn, t2n), exact_distance(inst.space(), x, tn)};
  if (r.trivially_satisfied() && sgn(r.numer) != 0) {
    throw std::logic_error("x = T^n x but T^n x != T^2n x");
  }
  return r;
}

RatioSample ratio(const Instance& inst, std::uint64_t order, PointRef x) {
  return to_sample(x, order, exact_ratio(inst, order, x));
}

ContractionReport alpha_exact(const Instance& inst, std::uint64_t order) {
  require_order(order);
  const FiniteSpace* space = inst.finite_space();
  if (space == nullptr) throw Error(ErrorCode::BadParams, "exact analysis needs a finite space");
  ContractionReport report;
  report.order = order;
  report.exact = true;
  report.samples.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    const PointRef x = PointRef::index(i);
    accumulate(report, x, exact_ratio(inst, order, x));
  }
  finish(report, false);
  return report;
}

ContractionReport alpha_sampled(const Instance& inst, std::uint64_t order, std::uint64_t index_cap) {
  require_order(order);
  const SequenceSpace* space = inst.sequence_space();
  if (space == nullptr) throw Error(ErrorCode::BadParams, "sampled analysis needs a sequence space");
  if (index_cap == 0 || index_cap > space->index_cap()) {
    throw Error(ErrorCode::BadParams, "index cap must lie in [1, " + std::to_string(space->index_cap()) + "]");
  }
  ContractionReport report;
  report.order = order;
  report.exact = false;
  report.samples.reserve(index_cap + 2);
  for (PointRef x : {PointRef::lower(), PointRef::upper()}) {
    accumulate(report, x, exact_ratio(inst, order, x));
  }
  for (std::uint64_t n = 1; n <= index_cap; ++n) {
    const PointRef x = PointRef::term(n);
    accumulate(report, x, exact_ratio(inst, order, x));
  }
  finish(report, true);
  return report;
}

ContractionReport analyze(const Instance& inst, std::uint64_t order, std::uint64_t index_cap) {
  if (inst.finite_space() != nullptr) return alpha_exact(inst, order);
  return alpha_sampled(inst, order, index_cap);
}

double ratio_limit_probe(const Instance& inst, std::uint64_t order, const SubsequenceSelector& selector,
                         std::uint64_t k) {
  if (inst.sequence_space() == nullptr) {
    throw Error(ErrorCode::BadParams, "limit probes run on sequence spaces");
  }
  if (k == 0) throw Error(ErrorCode::BadParams, "subsequence positions start at 1");
  const std::uint64_t n = selector(k);
  if (n == 0) throw Error(ErrorCode::InvalidPoint, "selector produced index 0");
  return to_double_toward_zero(exact_ratio(inst, order, PointRef::term(n)).value());
}

ClassCheck check_iterated_class(const Instance& inst, std::uint64_t order, ContractionClass cls,
                                double alpha) {
  require_order(order);
  const FiniteSpace* space = inst.finite_space();
  if (space == nullptr) throw Error(ErrorCode::BadParams, "class checks need a finite space");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::BadParams, "alpha must lie in (0, 1)");

  const TableMap s = power(*inst.table(), order);
  const auto d = [space](std::size_t i, std::size_t j) -> const Rational& { return space->exact(i, j); };

  ClassCheck out;
  out.alpha = rational_from_decimal(alpha);
  out.effective_graphic_alpha =
      cls == ContractionClass::Banach ? out.alpha : Rational(out.alpha / (Rational(1) - out.alpha));
  out.holds = true;
  Rational tightest = 0;
  bool bounded = true;

  for (std::size_t i = 0; i < space->size(); ++i) {
    for (std::size_t j = i + 1; j < space->size(); ++j) {
      const Rational& lhs = d(s(i), s(j));
      Rational factor;
      switch (cls) {
        case ContractionClass::Banach: factor = d(i, j); break;
        case ContractionClass::Kannan: factor = d(i, s(i)) + d(j, s(j)); break;
        case ContractionClass::Chatterjea: factor = d(i, s(j)) + d(j, s(i)); break;
      }
      if (lhs > out.alpha * factor) {
        out.holds = false;
        if (!out.witness) out.witness = std::pair{i, j};
      }
      if (sgn(lhs) == 0) continue;
      if (sgn(factor) == 0) {
        bounded = false;
      } else if (Rational q = lhs / factor; q > tightest) {
        tightest = q;
      }
    }
  }
  if (bounded) out.tightest = tightest;

  if (out.holds) {
    const ContractionReport graphic = alpha_exact(inst, order);
    if (graphic.alpha_min_exact > out.effective_graphic_alpha) {
      throw std::logic_error("class inequality holds but the implied graphic constant is exceeded");
    }
    out.graphic_alpha_min = graphic.alpha_min_exact;
  }
  return out;
}

}  // namespace gperiod

namespace gperiod {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Contraction: return "Contraction";
    case Verdict::NotContraction: return "NotContraction";
    case Verdict::InconclusiveSampled: return "InconclusiveSampled";
  }
  return "?";
}

std::string_view to_string(ContractionClass c) noexcept {
  switch (c) {
    case ContractionClass::Banach: return "Banach";
    case ContractionClass::Kannan: return "Kannan";
    case ContractionClass::Chatterjea: return "Chatterjea";
  }
  return "?";
}

}  // namespace gperiod
