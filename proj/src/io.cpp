#include "isotet/io.hpp"

#include <charconv>
#include <cstdio>

#include "json.hpp"

namespace isotet {
namespace {

using nlohmann::ordered_json;

Vec3 vec_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 3) throw GeometryError(ErrorCode::BadInput, "expected [x, y, z]");
  for (const auto& e : j)
    if (!e.is_number()) throw GeometryError(ErrorCode::BadInput, "expected numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ordered_json vec_to_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

ordered_json report_object(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite_id;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["max_residual"] = r.max_residual;
  j["residual_unit"] = r.residual_unit;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  return j;
}

}  // namespace

Tetrahedron parse_tetrahedron(std::string_view json_text) {
  const auto j = ordered_json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw GeometryError(ErrorCode::BadInput, "not a JSON object");
  if (j.contains("params")) {
    const Vec3 p = vec_from_json(j["params"]);
    return canonical_embedding(IsoscelesParams::make(p.x, p.y, p.z));
  }
  if (j.contains("vertices")) {
    const auto& v = j["vertices"];
    if (!v.is_array() || v.size() != 4) throw GeometryError(ErrorCode::BadInput, "expected 4 vertices");
    return {vec_from_json(v[0]), vec_from_json(v[1]), vec_from_json(v[2]), vec_from_json(v[3])};
  }
  throw GeometryError(ErrorCode::BadInput, "expected \"params\" or \"vertices\"");
}

Vec3 parse_triple(std::string_view text) {
  double out[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (pos < text.size() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out[i]);
    if (ec != std::errc{}) throw GeometryError(ErrorCode::BadInput, "bad number in \"" + std::string(text) + "\"");
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ',')
        throw GeometryError(ErrorCode::BadInput, "expected x,y,z");
      ++pos;
    }
  }
  if (pos != text.size()) throw GeometryError(ErrorCode::BadInput, "trailing characters");
  return {out[0], out[1], out[2]};
}

std::string report_json(const VerificationReport& report) {
  return report_object(report).dump(2) + "\n";
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_object(r));
  return arr.dump(2) + "\n";
}

std::string conjugate_json(const ConjugateResult& result) {
  ordered_json j;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FinitePoint>) {
          j["kind"] = "finite";
          j["point"] = vec_to_json(r.point);
        } else if constexpr (std::is_same_v<T, AtInfinity>) {
          j["kind"] = "infinite";
          j["direction"] = vec_to_json(r.direction);
        } else if constexpr (std::is_same_v<T, VertexDegenerate>) {
          j["kind"] = "vertex";
          j["vertex"] = std::string(vertex_name(r.vertex));
        } else {
          j["kind"] = "edge";
          j["edge"] = edge_name(r.edge);
        }
      },
      result);
  return j.dump(2) + "\n";
}

std::string conjugate_text(const ConjugateResult& result) {
  char buf[128];
  return std::visit(
      [&](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FinitePoint>) {
          std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", r.point.x, r.point.y, r.point.z);
          return buf;
        } else if constexpr (std::is_same_v<T, AtInfinity>) {
          std::snprintf(buf, sizeof buf, "at infinity, direction %.17g %.17g %.17g\n",
                        r.direction.x, r.direction.y, r.direction.z);
          return buf;
        } else if constexpr (std::is_same_v<T, VertexDegenerate>) {
          return "vertex " + std::string(vertex_name(r.vertex)) +
                 ": every point of the opposite faceplane\n";
        } else {
          return "edgeline " + edge_name(r.edge) + ": every point of the opposite edgeline\n";
        }
      },
      result);
}

}  // namespace isotet
