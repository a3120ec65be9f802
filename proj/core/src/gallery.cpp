#include "gperiod/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gperiod/error.hpp"

namespace gperiod {

std::string_view to_string(GalleryId id) noexcept {
  switch (id) {
    case GalleryId::Example22: return "example_2_2";
    case GalleryId::Example23: return "example_2_3";
    case GalleryId::Example24: return "example_2_4";
    case GalleryId::Example25: return "example_2_5";
  }
  return "?";
}

GalleryId parse_gallery_id(std::string_view text) {
  for (GalleryId id : {GalleryId::Example22, GalleryId::Example23, GalleryId::Example24, GalleryId::Example25}) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorCode::UnknownId, "unknown gallery id '" + std::string(text) + "'");
}

bool GalleryReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

namespace {

// Finite subset of the real line with the absolute-difference metric.
FiniteSpace line_space(const std::vector<long>& coords) {
  std::vector<std::string> labels;
  DistanceMatrix dist(coords.size(), std::vector<Rational>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    labels.push_back("p" + std::to_string(coords[i]));
    for (std::size_t j = 0; j < coords.size(); ++j) dist[i][j] = std::labs(coords[i] - coords[j]);
  }
  return FiniteSpace(std::move(labels), std::move(dist));
}

GalleryInstance example_2_2() {
  // x1 <-> x2 and x3 -> x4 -> x5 -> x3 on the discrete five-point space.
  Instance inst(FiniteSpace::discrete(5), TableMap({1, 0, 3, 4, 2}));
  Expectations e;
  e.orders.push_back({.order = 6, .holds = true, .verdict = Verdict::Contraction, .alpha_min = 0.0, .all_trivial = true});
  e.orders.push_back({.order = 1, .holds = false, .verdict = Verdict::NotContraction, .alpha_min = 1.0});
  e.oracles.push_back({6, {{0, 2}, {1, 2}, {2, 3}, {3, 3}, {4, 3}}, 2});
  e.solves.push_back({.order = 6, .start = PointRef::index(0), .period = 2,
                      .solution_case = SolutionCase::PeriodicPattern});
  e.solves.push_back({.order = 6, .start = PointRef::index(2), .period = 3,
                      .solution_case = SolutionCase::PeriodicPattern});
  e.periods.push_back({PointRef::index(0), 2});
  e.periods.push_back({PointRef::index(1), 2});
  e.periods.push_back({PointRef::index(2), 3});
  e.periods.push_back({PointRef::index(3), 3});
  e.periods.push_back({PointRef::index(4), 3});
  return {"discrete five-point space", std::move(inst), std::move(e)};
}

GalleryInstance example_2_3(const GalleryParams& params) {
  Instance inst(SequenceSpace(SequenceFamily::Alternating, params.a, params.b), ShiftMap{});
  const PointRef a = PointRef::lower();
  const PointRef b = PointRef::upper();
  Expectations e;
  // At a the ratio is exactly 1 (T swaps a and b), so sampling reports
  // NotContraction; along x_n the ratio only tends to 1.
  e.orders.push_back({.order = 1, .holds = false, .alpha_at_least = 0.999});
  e.point_ratios.push_back({1, a, 1.0, 0.0});
  e.orders.push_back({.order = 2, .holds = true, .verdict = Verdict::Contraction, .alpha_min = 0.25, .alpha_tol = 1e-12});
  e.probes.push_back({1, "n_k = k", [](std::uint64_t k) { return k; }, 20, 1.0, 1e-4});
  e.probes.push_back({2, "n_k = 2k+1", [](std::uint64_t k) { return 2 * k + 1; }, 7, 0.25, 0.0});
  e.solves.push_back({.order = 2, .start = PointRef::term(1), .period = 2,
                      .solution_case = SolutionCase::AllDistinct, .limits_near = {a, b}, .limit_tol = 1e-7});
  e.solves.push_back({.order = 2, .start = PointRef::term(2), .period = 2,
                      .solution_case = SolutionCase::AllDistinct, .limits_near = {b, a}, .limit_tol = 1e-7});
  e.periods.push_back({a, 2});
  e.periods.push_back({b, 2});
  return {"alternating sequence space", std::move(inst), std::move(e)};
}

GalleryInstance example_2_4(const GalleryParams& params) {
  Instance inst(SequenceSpace(SequenceFamily::Interleaved, params.a, params.b), ShiftMap{});
  const PointRef a = PointRef::lower();
  const PointRef b = PointRef::upper();
  Expectations e;
  e.orders.push_back({.order = 1, .holds = false});
  e.orders.push_back({.order = 2, .holds = false});
  e.orders.push_back({.order = 3, .holds = false, .verdict = Verdict::NotContraction});
  e.orders.push_back({.order = 4, .holds = true, .verdict = Verdict::Contraction, .alpha_min = 0.5, .alpha_tol = 1e-9});
  e.point_ratios.push_back({3, a, 1.0, 0.0});
  e.probes.push_back({2, "n_k = 4k-1", [](std::uint64_t k) { return 4 * k - 1; }, 15, 1.0, 1e-2});
  e.probes.push_back({4, "n_k = 4k-3", [](std::uint64_t k) { return 4 * k - 3; }, 5, 0.5, 0.0});
  e.solves.push_back({.order = 4, .start = PointRef::term(1), .period = 2,
                      .solution_case = SolutionCase::PeriodicPattern, .limits_near = {a, b, a, b}, .limit_tol = 1e-7});
  e.periods.push_back({a, 2});
  e.periods.push_back({b, 2});
  return {"interleaved sequence space", std::move(inst), std::move(e)};
}

GalleryInstance iterated_class_case(std::string label, Instance inst, ContractionClass cls, double alpha,
                                    PointRef start) {
  Expectations e;
  e.classes.push_back({2, cls, alpha});
  e.orders.push_back({.order = 2, .holds = true, .verdict = Verdict::Contraction});
  e.solves.push_back({.order = 2, .start = start, .period = 1, .solution_case = SolutionCase::AllEqual});
  return {std::move(label), std::move(inst), std::move(e)};
}

std::string describe_point(const Instance& inst, PointRef p) {
  std::string s = point_label(inst.space(), p);
  if (auto c = point_coordinate(inst.space(), p)) {
    std::ostringstream os;
    os << s << " (" << *c << ")";
    return os.str();
  }
  return s;
}

bool close(double got, double expected, double tol) {
  return tol == 0.0 ? got == expected : std::abs(got - expected) <= tol;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Instance banach_square_instance() {
  // p4 -> p2 -> p1 -> p0 -> p0; T^2 halves distances at worst.
  return Instance(line_space({0, 1, 2, 4}), TableMap({0, 0, 1, 2}));
}

Instance kannan_square_instance() {
  // Discrete three points, x1 -> x2 -> x3 -> x3; T^2 is constant.
  return Instance(FiniteSpace::discrete(3), TableMap({1, 2, 2}));
}

Instance chatterjea_square_instance() {
  // p6 -> p2 -> p1 -> p0 -> p0.
  return Instance(line_space({0, 1, 2, 6}), TableMap({0, 0, 1, 2}));
}

GalleryCase build_case(GalleryId id, const GalleryParams& params) {
  GalleryCase gc;
  gc.id = id;
  gc.params = params;
  switch (id) {
    case GalleryId::Example22: gc.instances.push_back(example_2_2()); break;
    case GalleryId::Example23: gc.instances.push_back(example_2_3(params)); break;
    case GalleryId::Example24: gc.instances.push_back(example_2_4(params)); break;
    case GalleryId::Example25:
      gc.instances.push_back(iterated_class_case("T^2 Banach", banach_square_instance(),
                                                 ContractionClass::Banach, 0.5, PointRef::index(3)));
      gc.instances.push_back(iterated_class_case("T^2 Kannan", kannan_square_instance(),
                                                 ContractionClass::Kannan, 0.4, PointRef::index(0)));
      gc.instances.push_back(iterated_class_case("T^2 Chatterjea", chatterjea_square_instance(),
                                                 ContractionClass::Chatterjea, 0.3, PointRef::index(3)));
      break;
  }
  return gc;
}

GalleryReport run_gallery(const GalleryCase& gallery_case, const ReportSink& sink) {
  GalleryReport report;
  report.id = gallery_case.id;
  report.params = gallery_case.params;

  for (const GalleryInstance& gi : gallery_case.instances) {
    const Instance& inst = gi.instance;
    const Expectations& e = gi.expected;
    auto record = [&](std::string name, bool pass, std::string detail) {
      report.checks.push_back({gi.label, std::move(name), pass, std::move(detail)});
      if (sink) sink(report.checks.back());
    };

    for (const auto& oe : e.orders) {
      const ContractionReport r = analyze(inst, oe.order);
      bool ok = (r.verdict == Verdict::Contraction) == oe.holds;
      if (oe.verdict) ok = ok && r.verdict == *oe.verdict;
      if (oe.alpha_min) ok = ok && close(r.alpha_min, *oe.alpha_min, oe.alpha_tol);
      if (oe.alpha_at_least) ok = ok && r.alpha_min >= *oe.alpha_at_least;
      if (oe.all_trivial) ok = ok && r.trivially_satisfied == r.samples.size();
      std::ostringstream d;
      d << to_string(r.verdict) << ", alpha_min " << num(r.alpha_min) << ", " << r.trivially_satisfied << "/"
        << r.samples.size() << " trivially satisfied";
      record("order " + std::to_string(oe.order) + (oe.holds ? " holds" : " fails"), ok, d.str());
    }

    for (const auto& pe : e.point_ratios) {
      const RatioSample s = ratio(inst, pe.order, pe.point);
      const double got = s.value.value_or(0.0);
      record("order " + std::to_string(pe.order) + " ratio at " + point_label(inst.space(), pe.point),
             !s.trivially_satisfied() && close(got, pe.expected, pe.tol), "ratio " + num(got));
    }

    for (const auto& pr : e.probes) {
      const double got = ratio_limit_probe(inst, pr.order, pr.selector, pr.k);
      record("order " + std::to_string(pr.order) + " probe " + pr.selector_name + " at k=" + std::to_string(pr.k),
             close(got, pr.expected, pr.tol), "ratio " + num(got) + ", expected " + num(pr.expected));
    }

    for (const auto& ce : e.classes) {
      const ClassCheck cc = check_iterated_class(inst, ce.order, ce.cls, ce.alpha);
      std::ostringstream d;
      d << (cc.holds ? "holds" : "fails") << ", effective constant " << to_string(cc.effective_graphic_alpha);
      if (cc.graphic_alpha_min) d << ", graphic alpha_min " << to_string(*cc.graphic_alpha_min);
      const bool ok = cc.holds && cc.graphic_alpha_min && *cc.graphic_alpha_min <= cc.effective_graphic_alpha;
      record(std::string(to_string(ce.cls)) + " class for T^" + std::to_string(ce.order), ok, d.str());
    }

    for (const auto& se : e.solves) {
      const PeriodicSolution sol = solve(inst, se.order, se.start);
      bool ok = sol.period == se.period && sol.solution_case == se.solution_case && se.order % sol.period == 0;
      std::ostringstream d;
      d << "case " << to_string(sol.solution_case) << ", period " << sol.period << ", residual " << sol.residual
        << ", cycle {";
      for (std::size_t i = 0; i < sol.cycle.size(); ++i) d << (i ? ", " : "") << describe_point(inst, sol.cycle[i]);
      d << "}";
      if (!se.limits_near.empty()) {
        ok = ok && se.limits_near.size() == sol.limits.size();
        for (std::size_t i = 0; ok && i < sol.limits.size(); ++i) {
          ok = distance(inst.space(), sol.limits[i], se.limits_near[i]) <= se.limit_tol;
        }
      }
      if (inst.finite_space() != nullptr) {
        const CrosscheckResult cr = crosscheck(inst, se.order, sol);
        ok = ok && cr.agree;
        d << "; oracle: " << cr.detail;
      }
      record("solve order " + std::to_string(se.order) + " from " + point_label(inst.space(), se.start), ok, d.str());
    }

    for (const auto& pe : e.periods) {
      const auto p = prime_period(inst, pe.point, 2 * pe.period + 2);
      record("prime period of " + point_label(inst.space(), pe.point), p && *p == pe.period,
             p ? "period " + std::to_string(*p) : "not periodic");
    }

    for (const auto& oe : e.oracles) {
      const OracleResult r = enumerate_periodic(inst, oe.order);
      bool disjoint = true;
      std::set<std::size_t> seen;
      for (const auto& orbit : r.orbits) {
        for (std::size_t x : orbit) disjoint = disjoint && seen.insert(x).second;
      }
      const bool ok = r.periodic_points == oe.periodic && r.orbits.size() == oe.orbit_count && disjoint &&
                      r.divisor_ok;
      record("oracle order " + std::to_string(oe.order), ok,
             std::to_string(r.periodic_points.size()) + " periodic points in " + std::to_string(r.orbits.size()) +
                 " orbits");
    }
  }
  return report;
}

}  // namespace gperiod
