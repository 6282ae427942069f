#include "biquat/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace biquat::io {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw validation_error(message);
}

double number_at(const json& j, const char* what) {
  require(j.is_number(), std::string(what) + ": expected a number");
  return j.get<double>();
}

bool is_primitive(const json& j) { return !j.is_object() && !j.is_array(); }

void dump_walk(const json& j, std::string& out, int level, int indent) {
  const std::string pad((level + 1) * indent, ' ');
  const std::string close_pad(level * indent, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* sp = indent > 0 ? " " : "";

  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{";
    out += nl;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) {
        out += ",";
        out += nl;
      }
      first = false;
      out += pad + json(key).dump() + ":" + sp;
      dump_walk(value, out, level + 1, indent);
    }
    out += nl;
    out += close_pad + "}";
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && is_primitive(v);
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (flat) {
      out += "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += std::string(",") + sp;
        first = false;
        dump_walk(v, out, level, indent);
      }
      out += "]";
      return;
    }
    out += "[";
    out += nl;
    bool first = true;
    for (const auto& v : j) {
      if (!first) {
        out += ",";
        out += nl;
      }
      first = false;
      out += pad;
      dump_walk(v, out, level + 1, indent);
    }
    out += nl;
    out += close_pad + "]";
    return;
  }
  if (j.is_number_float()) {
    out += format_double(j.get<double>());
    return;
  }
  out += j.dump();  // integers, strings (escaped), booleans, null
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // collapses negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string dump_stable(const json& j, int indent) {
  std::string out;
  dump_walk(j, out, 0, indent);
  return out;
}

json to_json(cplx v) { return json::array({v.real(), v.imag()}); }

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json to_json(const Biquaternion& a) {
  return json{{"w", to_json(a.w)},
              {"x", to_json(a.x)},
              {"y", to_json(a.y)},
              {"z", to_json(a.z)}};
}

json to_json(const Point4& p) {
  return json{{"t", p.t}, {"x", p.x}, {"y", p.y}, {"z", p.z}};
}

json to_json(const LorentzGenerator& g) {
  return json{{"kappa", to_json(g.kappa)}, {"lambda", to_json(g.lambda)}};
}

json to_json(const SpinorComponents& c) {
  return json{{"xi", to_json(c.xi)}, {"chi", to_json(c.chi)}};
}

cplx cplx_from_json(const json& j, const char* what) {
  require(j.is_array() && j.size() == 2,
          std::string(what) + ": expected [re, im]");
  return {number_at(j[0], what), number_at(j[1], what)};
}

Vec3 vec3_from_json(const json& j, const char* what) {
  require(j.is_array() && j.size() == 3,
          std::string(what) + ": expected [x, y, z]");
  return {number_at(j[0], what), number_at(j[1], what), number_at(j[2], what)};
}

Biquaternion biquaternion_from_json(const json& j) {
  require(j.is_object(), "biquaternion: expected an object");
  for (const char* key : {"w", "x", "y", "z"}) {
    require(j.contains(key), std::string("biquaternion: missing \"") + key + "\"");
  }
  return {cplx_from_json(j["w"], "biquaternion.w"),
          cplx_from_json(j["x"], "biquaternion.x"),
          cplx_from_json(j["y"], "biquaternion.y"),
          cplx_from_json(j["z"], "biquaternion.z")};
}

Point4 point4_from_json(const json& j) {
  require(j.is_object(), "point: expected an object");
  for (const char* key : {"t", "x", "y", "z"}) {
    require(j.contains(key), std::string("point: missing \"") + key + "\"");
  }
  return {number_at(j["t"], "point.t"), number_at(j["x"], "point.x"),
          number_at(j["y"], "point.y"), number_at(j["z"], "point.z")};
}

LorentzGenerator generator_from_json(const json& j) {
  require(j.is_object() && j.contains("kappa") && j.contains("lambda"),
          "generator: expected {\"kappa\": [...], \"lambda\": [...]}");
  return {vec3_from_json(j["kappa"], "generator.kappa"),
          vec3_from_json(j["lambda"], "generator.lambda")};
}

SpinorComponents spinor_components_from_json(const json& j) {
  require(j.is_object() && j.contains("xi") && j.contains("chi"),
          "spinor: expected {\"xi\": [re, im], \"chi\": [re, im]}");
  return {cplx_from_json(j["xi"], "spinor.xi"),
          cplx_from_json(j["chi"], "spinor.chi")};
}

json parse_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw validation_error("invalid JSON: " + text);
  }
  return parsed;
}

std::string render_report(const CommandReport& r, bool stabilize_time) {
  json doc;
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["outputs"] = r.outputs;
  doc["residuals"] = r.residuals;
  doc["tolerances"] = r.tolerances;
  doc["passed"] = r.passed;
  doc["backend"] = r.backend;
  doc["wall_time_ms"] = stabilize_time ? 0.0 : r.wall_time_ms;
  return dump_stable(doc, 2) + "\n";
}

}  // namespace biquat::io
