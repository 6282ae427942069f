// JSON input/output for the command-line driver.
//
// Parsing accepts the wire shapes documented per type below and throws
// validation_error with a readable message on anything malformed, so the
// driver can map bad input to a usage error uniformly.
//
// Rendering is byte-stable: reports are dumped by a custom walker that
// prints every floating-point number with "%.15g" (negative zero
// normalized to 0), keeps object keys in insertion order, and lays out
// arrays of primitives on a single line.  Running the same command twice
// yields identical bytes.

#pragma once

#include <string>

#include <json.hpp>

#include "biquat/biquaternion.hpp"
#include "biquat/lorentz.hpp"
#include "biquat/spinor.hpp"

namespace biquat::io {

using json = nlohmann::ordered_json;

/// "%.15g" with -0 normalized to 0; non-finite values render as null.
std::string format_double(double v);

/// Deterministic pretty-printer (see header comment).
std::string dump_stable(const json& j, int indent = 0);

// Wire shapes:
//   cplx              [re, im]
//   Vec3              [x, y, z]
//   Biquaternion      {"w": [re, im], "x": [...], "y": [...], "z": [...]}
//   Point4            {"t": t, "x": x, "y": y, "z": z}
//   LorentzGenerator  {"kappa": [x, y, z], "lambda": [x, y, z]}
//   SpinorComponents  {"xi": [re, im], "chi": [re, im]}
json to_json(cplx v);
json to_json(const Vec3& v);
json to_json(const Biquaternion& a);
json to_json(const Point4& p);
json to_json(const LorentzGenerator& g);
json to_json(const SpinorComponents& c);

cplx cplx_from_json(const json& j, const char* what = "complex");
Vec3 vec3_from_json(const json& j, const char* what = "vector");
Biquaternion biquaternion_from_json(const json& j);
Point4 point4_from_json(const json& j);
LorentzGenerator generator_from_json(const json& j);
SpinorComponents spinor_components_from_json(const json& j);

/// Parse a JSON document; throws validation_error on syntax errors.
json parse_text(const std::string& text);

/// Uniform command report rendered by every subcommand.
struct CommandReport {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  json residuals = json::object();
  json tolerances = json::object();
  bool passed = true;
  std::string backend = "analytic";
  double wall_time_ms = 0.0;
};

/// Render with the stable dumper; wall time is the only field expected to
/// vary between runs and is therefore rounded to a fixed grid before
/// printing when stabilize_time is set.
std::string render_report(const CommandReport& r, bool stabilize_time = false);

}  // namespace biquat::io
