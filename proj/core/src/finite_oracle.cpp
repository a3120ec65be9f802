#include "gperiod/finite_oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gperiod/contraction.hpp"
#include "gperiod/error.hpp"

namespace gperiod {

OracleResult enumerate_periodic(const Instance& inst, std::uint64_t order, bool full_scan) {
  if (order == 0) throw Error(ErrorCode::BadParams, "order must be a positive integer");
  const FiniteSpace* space = inst.finite_space();
  if (space == nullptr) throw Error(ErrorCode::BadParams, "the oracle runs on finite spaces only");
  const TableMap& t = *inst.table();

  std::vector<std::uint64_t> candidates;
  if (full_scan) {
    for (std::uint64_t p = 1; p <= space->size(); ++p) candidates.push_back(p);
  } else {
    candidates = divisors(order);
  }

  OracleResult out;
  out.order = order;
  for (std::size_t x = 0; x < space->size(); ++x) {
    std::size_t y = x;
    std::uint64_t steps = 0;
    for (std::uint64_t p : candidates) {
      for (; steps < p; ++steps) y = t(y);
      if (y == x) {
        out.periodic_points.push_back({x, p});
        break;
      }
    }
  }

  std::vector<bool> placed(space->size(), false);
  for (const auto& pp : out.periodic_points) {
    if (placed[pp.point]) continue;
    std::vector<std::size_t> cycle;
    std::size_t y = pp.point;
    for (std::uint64_t k = 0; k < pp.period; ++k) {
      cycle.push_back(y);
      placed[y] = true;
      y = t(y);
    }
    out.orbits.push_back(std::move(cycle));
  }

  out.divisor_ok = std::all_of(out.periodic_points.begin(), out.periodic_points.end(),
                               [order](const PeriodicPoint& pp) { return order % pp.period == 0; });
  if (out.periodic_points.empty() && alpha_exact(inst, order).verdict == Verdict::Contraction) {
    out.divisor_ok = false;
  }
  return out;
}

Instance random_instance(std::uint64_t seed, std::size_t max_points) {
  if (max_points < 2 || max_points > 12) {
    throw Error(ErrorCode::BadParams, "max_points must lie in [2, 12]");
  }
  std::mt19937_64 rng(seed);
  // Raw engine output keeps the generator identical across standard libraries.
  const auto below = [&rng](std::uint64_t m) { return rng() % m; };

  const std::size_t n = 2 + below(max_points - 1);
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational w(static_cast<long>(1 + below(12)), static_cast<unsigned long>(1 + below(4)));
      w.canonicalize();
      dist[i][j] = dist[j][i] = w;
    }
  }
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (Rational through = dist[i][via] + dist[via][j]; through < dist[i][j]) dist[i][j] = through;
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    images.push_back(below(n));
  }
  return Instance(FiniteSpace(std::move(labels), std::move(dist)), TableMap(std::move(images)));
}

CrosscheckResult crosscheck(const Instance& inst, std::uint64_t order, const PeriodicSolution& solution) {
  const OracleResult oracle = enumerate_periodic(inst, order);
  const PointRef rep = solution.representative;
  if (rep.kind() != PointRef::Kind::Index) return {false, "representative is not a finite-space point"};

  const auto hit = std::find_if(oracle.periodic_points.begin(), oracle.periodic_points.end(),
                                [&](const PeriodicPoint& pp) { return pp.point == rep.value(); });
  const std::string name = inst.finite_space()->label(rep.value());
  if (hit == oracle.periodic_points.end()) {
    return {false, "representative " + name + " is not periodic with a period dividing the order"};
  }
  if (hit->period != solution.period) {
    std::ostringstream os;
    os << "solver period " << solution.period << " but oracle prime period " << hit->period << " at " << name;
    return {false, os.str()};
  }

  std::set<std::size_t> solver_cycle;
  for (PointRef p : solution.cycle) solver_cycle.insert(p.value());
  for (const auto& orbit : oracle.orbits) {
    std::set<std::size_t> members(orbit.begin(), orbit.end());
    if (!members.contains(rep.value())) continue;
    if (members == solver_cycle) return {true, "cycle through " + name + " agrees"};
    return {false, "solver cycle differs from the oracle orbit of " + name};
  }
  return {false, "oracle has no orbit through " + name};
}

}  // namespace gperiod
