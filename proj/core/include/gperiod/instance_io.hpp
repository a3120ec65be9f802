#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gperiod/contraction.hpp"
#include "gperiod/finite_oracle.hpp"
#include "gperiod/gallery.hpp"
#include "gperiod/periodic_solver.hpp"

namespace gperiod {

/// Builds an instance from an instance document:
///   {"kind": "finite", "points": [...], "distance": [[...]], "map": {"x1": "x2", ...}}
///   {"kind": "gallery", "id": "example_2_3", "params": {"a": 0, "b": 1}}
/// Distances are "p/q" or decimal strings (JSON numbers are also accepted).
/// Throws Error(ParseError), Error(InvalidMetric), Error(InvalidMap),
/// Error(UnknownId) or Error(BadParams).
Instance load_instance(const nlohmann::json& doc);
Instance load_instance_file(const std::filesystem::path& path);

/// A finite-space label, or "a", "b", "x_n" / "xn" for sequence spaces.
/// Throws Error(InvalidPoint).
PointRef parse_point(const SpaceModel& space, std::string_view text);

nlohmann::json point_json(const SpaceModel& space, PointRef p);
nlohmann::json report_json(const Instance& inst, const ContractionReport& report, bool with_samples);
nlohmann::json solution_json(const Instance& inst, const PeriodicSolution& solution);
nlohmann::json oracle_json(const Instance& inst, const OracleResult& result);
nlohmann::json gallery_json(const GalleryReport& report);

}  // namespace gperiod
