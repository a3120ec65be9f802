#include "gperiod/instance_io.hpp"

#include <charconv>
#include <cctype>
#include <fstream>

#include "gperiod/error.hpp"

namespace gperiod {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Rational distance_entry(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return parse_rational(std::to_string(v.get<unsigned long long>()));
  // Shortest round-trip text recovers the decimal literal the user wrote.
  if (v.is_number_float()) return rational_from_decimal(v.get<double>());
  parse_fail("distance entries must be strings or numbers");
}

Instance load_finite(const json& doc) {
  const json& points = member(doc, "points");
  if (!points.is_array()) parse_fail("'points' must be an array");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) parse_fail("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }

  const json& rows = member(doc, "distance");
  if (!rows.is_array()) parse_fail("'distance' must be an array of rows");
  DistanceMatrix dist;
  for (const auto& row : rows) {
    if (!row.is_array()) parse_fail("'distance' rows must be arrays");
    auto& out = dist.emplace_back();
    for (const auto& v : row) out.push_back(distance_entry(v));
  }
  FiniteSpace space(std::move(labels), std::move(dist));

  if (!doc.contains("map")) throw Error(ErrorCode::InvalidMap, "finite instance has no 'map'");
  const json& map = doc.at("map");
  if (!map.is_object()) parse_fail("'map' must be an object from label to label");
  std::vector<std::size_t> images(space.size());
  std::vector<bool> assigned(space.size(), false);
  for (const auto& [from, to] : map.items()) {
    const auto src = space.find(from);
    if (!src) throw Error(ErrorCode::InvalidMap, "map source '" + from + "' is not a point");
    if (!to.is_string()) parse_fail("map images must be labels");
    const auto dst = space.find(to.get<std::string>());
    if (!dst) throw Error(ErrorCode::InvalidMap, "image of '" + from + "' is not a point");
    images[*src] = *dst;
    assigned[*src] = true;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!assigned[i]) throw Error(ErrorCode::InvalidMap, "point '" + space.label(i) + "' has no image");
  }
  return Instance(std::move(space), TableMap(std::move(images)));
}

Instance load_gallery(const json& doc) {
  const json& id_field = member(doc, "id");
  if (!id_field.is_string()) parse_fail("'id' must be a string");
  const GalleryId id = parse_gallery_id(id_field.get<std::string>());
  GalleryParams params;
  if (doc.contains("params")) {
    const json& p = doc.at("params");
    if (!p.is_object()) parse_fail("'params' must be an object");
    if (p.contains("a")) {
      if (!p.at("a").is_number()) parse_fail("'a' must be a number");
      params.a = p.at("a").get<double>();
    }
    if (p.contains("b")) {
      if (!p.at("b").is_number()) parse_fail("'b' must be a number");
      params.b = p.at("b").get<double>();
    }
  }
  if (id == GalleryId::Example25) {
    throw Error(ErrorCode::BadParams, "example_2_5 bundles several instances; run it with the gallery command");
  }
  GalleryCase gc = build_case(id, params);
  return std::move(gc.instances.front().instance);
}

}  // namespace

Instance load_instance(const nlohmann::json& doc) {
  const json& kind = member(doc, "kind");
  if (kind == "finite") return load_finite(doc);
  if (kind == "gallery") return load_gallery(doc);
  parse_fail("unknown instance kind " + kind.dump());
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  return load_instance(doc);
}

PointRef parse_point(const SpaceModel& space, std::string_view text) {
  if (const auto* f = std::get_if<FiniteSpace>(&space)) {
    if (auto i = f->find(text)) return PointRef::index(*i);
    throw Error(ErrorCode::InvalidPoint, "no point labelled '" + std::string(text) + "'");
  }
  const auto& seq = std::get<SequenceSpace>(space);
  if (text == "a") return PointRef::lower();
  if (text == "b") return PointRef::upper();
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == 'x') digits.remove_prefix(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  std::uint64_t n = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || text.front() != 'x' || ec != std::errc{} || end != digits.data() + digits.size() || n == 0 ||
      n > seq.index_cap()) {
    throw Error(ErrorCode::InvalidPoint, "expected a, b or x_n with 1 <= n <= " + std::to_string(seq.index_cap()) +
                                             ", got '" + std::string(text) + "'");
  }
  return PointRef::term(n);
}

json point_json(const SpaceModel& space, PointRef p) {
  json j{{"label", point_label(space, p)}};
  if (auto c = point_coordinate(space, p)) {
    j["coord"] = *c;
  } else {
    j["index"] = p.value();
  }
  return j;
}

json report_json(const Instance& inst, const ContractionReport& report, bool with_samples) {
  json j{{"order", report.order},
         {"alpha_min", report.alpha_min},
         {"exact", report.exact},
         {"verdict", to_string(report.verdict)},
         {"witness", report.witness ? point_json(inst.space(), *report.witness) : json(nullptr)},
         {"trivially_satisfied", report.trivially_satisfied},
         {"points_examined", report.samples.size()}};
  if (report.exact) j["alpha_min_rational"] = to_string(report.alpha_min_exact);
  if (with_samples) {
    json samples = json::array();
    for (const auto& s : report.samples) {
      json sj{{"point", point_json(inst.space(), s.point)}, {"numer", s.numer}, {"denom", s.denom}};
      if (s.value) {
        sj["ratio"] = *s.value;
      } else {
        sj["trivially_satisfied"] = true;
      }
      samples.push_back(std::move(sj));
    }
    j["samples"] = std::move(samples);
  }
  return j;
}

json solution_json(const Instance& inst, const PeriodicSolution& solution) {
  json cycle = json::array();
  for (PointRef p : solution.cycle) cycle.push_back(point_json(inst.space(), p));
  json limits = json::array();
  for (PointRef p : solution.limits) limits.push_back(point_json(inst.space(), p));
  return json{{"order", solution.order},
              {"case", to_string(solution.solution_case)},
              {"period", solution.period},
              {"representative", point_json(inst.space(), solution.representative)},
              {"cycle", std::move(cycle)},
              {"limits", std::move(limits)},
              {"residual", solution.residual},
              {"iterations", solution.iterations_used},
              {"stopping_rule", "geometric tail bound below tol"}};
}

json oracle_json(const Instance& inst, const OracleResult& result) {
  json periodic = json::array();
  for (const auto& pp : result.periodic_points) {
    periodic.push_back({{"point", point_json(inst.space(), PointRef::index(pp.point))}, {"period", pp.period}});
  }
  json orbits = json::array();
  for (const auto& orbit : result.orbits) {
    json o = json::array();
    for (std::size_t x : orbit) o.push_back(point_json(inst.space(), PointRef::index(x)));
    orbits.push_back(std::move(o));
  }
  return json{{"order", result.order},
              {"periodic", std::move(periodic)},
              {"orbits", std::move(orbits)},
              {"divisor_ok", result.divisor_ok}};
}

json gallery_json(const GalleryReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"instance", c.instance}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  json j{{"id", to_string(report.id)}, {"pass", report.pass()}, {"checks", std::move(checks)}};
  if (report.id == GalleryId::Example23 || report.id == GalleryId::Example24) {
    j["params"] = {{"a", report.params.a}, {"b", report.params.b}};
  }
  return j;
}

}  // namespace gperiod
