// biquat — one-shot verification and computation commands over the
// biquaternion toolkit, with JSON input/output.
//
// Subcommands: boost, rotate, dirac, pauli, maxwell, cpt, vary, selftest.
// Global flags: --backend {analytic|fd}, --tol <float>, --seed <int>,
// --gaussian-units (display annotation only).
//
// Exit codes: 0 all checks passed, 1 a recorded check failed, 2 usage or
// input error.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biquat/calculus.hpp"
#include "biquat/dynamics.hpp"
#include "biquat/grassmann.hpp"
#include "biquat/json_io.hpp"
#include "biquat/lorentz.hpp"
#include "biquat/matrix_bridge.hpp"

using namespace biquat;
using io::json;

namespace {

// --------------------------------------------------------------------------
// Shared plumbing.
// --------------------------------------------------------------------------

struct GlobalFlags {
  std::string backend = "analytic";
  double tol = -1.0;  // sentinel: per-command default
  unsigned seed = 20260819;
  bool gaussian_units = false;

  bool fd() const { return backend == "fd"; }
  double tolerance(double analytic_default, double fd_default) const {
    if (tol > 0.0) return tol;
    return fd() ? fd_default : analytic_default;
  }
};

/// Inline JSON or @file indirection.
json load_json_arg(const std::string& text, const char* what) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1), std::ios::binary);
    if (!in) {
      throw validation_error(std::string(what) + ": cannot read file '" +
                             text.substr(1) + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return io::parse_text(buf.str());
  }
  return io::parse_text(text);
}

Polynomial poly_from_json(const json& j, const char* what) {
  if (!j.is_array()) {
    throw validation_error(std::string(what) +
                           ": expected an array of [coeff, pt, px, py, pz] rows");
  }
  Polynomial poly;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != 5 || !row[0].is_number() ||
        !row[1].is_number_integer() || !row[2].is_number_integer() ||
        !row[3].is_number_integer() || !row[4].is_number_integer()) {
      throw validation_error(std::string(what) +
                             ": each row must be [coeff, pt, px, py, pz]");
    }
    poly.terms.push_back(PolyTerm{row[0].get<double>(), row[1].get<int>(),
                                  row[2].get<int>(), row[3].get<int>(),
                                  row[4].get<int>()});
  }
  return poly;
}

json poly_to_json(const Polynomial& p) {
  json rows = json::array();
  for (const PolyTerm& t : p.terms) {
    rows.push_back(json::array({t.coeff, t.pt, t.px, t.py, t.pz}));
  }
  return rows;
}

/// Potential family selected by --field plus its parameter flags.
struct FieldFlags {
  std::string family = "none";
  std::string k_text = "[0.0, 0.7, 0.0]";
  std::string pol_text = "[0.0, 0.0, 1.0]";
  double amplitude = 0.1;
  double phase0 = 0.0;
  std::string b_text = "[0.0, 0.0, 1.0]";
  double charge = 1.0;
  std::string phi_text;   // pure_gauge polynomial
  std::string poly_text;  // custom_polynomial: {"a0": rows, ..., "a3": rows}

  void attach(CLI::App* cmd, const std::string& default_family) {
    family = default_family;
    cmd->add_option("--field", family, "potential family")
        ->check(CLI::IsMember({"none", "plane_wave_em", "constant_B", "coulomb",
                               "pure_gauge", "custom_polynomial"}));
    cmd->add_option("--k", k_text, "plane_wave_em wave vector [x, y, z]");
    cmd->add_option("--pol", pol_text, "plane_wave_em polarization [x, y, z]");
    cmd->add_option("--amplitude", amplitude, "plane_wave_em amplitude");
    cmd->add_option("--phase0", phase0, "plane_wave_em phase offset");
    cmd->add_option("--b", b_text, "constant_B field [x, y, z]");
    cmd->add_option("--q", charge, "coulomb charge");
    cmd->add_option("--phi", phi_text,
                    "pure_gauge polynomial, rows [coeff, pt, px, py, pz]");
    cmd->add_option("--poly", poly_text,
                    "custom_polynomial components {\"a0\": rows, ... \"a3\": rows}");
  }

  BiquatField build(json& inputs_echo) const {
    json desc;
    desc["family"] = family;
    BiquatField field = em_zero();
    if (family == "plane_wave_em") {
      const Vec3 k = io::vec3_from_json(load_json_arg(k_text, "--k"), "--k");
      const Vec3 pol =
          io::vec3_from_json(load_json_arg(pol_text, "--pol"), "--pol");
      desc["k"] = io::to_json(k);
      desc["polarization"] = io::to_json(pol);
      desc["amplitude"] = amplitude;
      desc["phase0"] = phase0;
      field = em_plane_wave(k, pol, amplitude, phase0);
    } else if (family == "constant_B") {
      const Vec3 b = io::vec3_from_json(load_json_arg(b_text, "--b"), "--b");
      desc["b"] = io::to_json(b);
      field = em_constant_b(b);
    } else if (family == "coulomb") {
      desc["q"] = charge;
      field = em_coulomb(charge);
    } else if (family == "pure_gauge") {
      if (phi_text.empty()) {
        throw validation_error("pure_gauge requires --phi");
      }
      const Polynomial phi = poly_from_json(load_json_arg(phi_text, "--phi"), "--phi");
      desc["phi"] = poly_to_json(phi);
      field = em_pure_gauge(phi);
    } else if (family == "custom_polynomial") {
      if (poly_text.empty()) {
        throw validation_error("custom_polynomial requires --poly");
      }
      const json spec = load_json_arg(poly_text, "--poly");
      std::array<Polynomial, 4> components;
      const char* keys[4] = {"a0", "a1", "a2", "a3"};
      for (int c = 0; c < 4; ++c) {
        if (spec.contains(keys[c])) {
          components[c] = poly_from_json(spec[keys[c]], keys[c]);
        }
      }
      desc["poly"] = spec;
      field = em_custom_polynomial(components);
    }
    inputs_echo["potential"] = desc;
    return field;
  }
};

json vec3_json(const Vec3& v) { return io::to_json(v); }

constexpr Point4 kSamplePoint{0.3, 0.1, -0.2, 0.5};

json point_to_json(const Point4& p) { return io::to_json(p); }

void finish(io::CommandReport& report, const GlobalFlags& flags,
            std::chrono::steady_clock::time_point t0) {
  report.backend = flags.backend;
  report.outputs["units"] =
      flags.gaussian_units ? "gaussian (display annotation only)"
                           : "natural, heaviside-lorentz";
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  std::fputs(io::render_report(report).c_str(), stdout);
}

double max3(double a, double b, double c) { return std::max(a, std::max(b, c)); }

// --------------------------------------------------------------------------
// boost / rotate.
// --------------------------------------------------------------------------

struct TransformArgs {
  std::string generator_text;
  std::string vector_text;
  std::string left_text;
  std::string right_text;
  // rotate-only convenience surface.
  std::string axis_text;
  double angle = std::numbers::pi / 2.0;
  std::string pure_text = "[1.0, 0.0, 0.0]";
};

int run_transform(const char* name, const TransformArgs& args,
                  const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = flags.tolerance(1e-10, 1e-10);
  io::CommandReport report;
  report.command = name;
  report.tolerances["invariant"] = tol;

  LorentzGenerator gen{};
  const bool rotate_surface = !args.axis_text.empty();
  if (rotate_surface) {
    const Vec3 axis =
        io::vec3_from_json(load_json_arg(args.axis_text, "--axis"), "--axis");
    if (norm(axis) == 0.0) {
      throw validation_error("--axis: rotation axis must be nonzero");
    }
    gen = LorentzGenerator{(args.angle / norm(axis)) * axis, {0.0, 0.0, 0.0}};
    report.inputs["axis"] = vec3_json(axis);
    report.inputs["angle"] = args.angle;
  } else if (!args.generator_text.empty()) {
    gen = io::generator_from_json(load_json_arg(args.generator_text, "--generator"));
  } else {
    throw validation_error(std::string(name) +
                           ": provide --generator (or --axis/--angle for rotate)");
  }
  report.inputs["generator"] = io::to_json(gen);

  bool all_ok = true;
  bool have_payload = false;

  if (!args.vector_text.empty()) {
    have_payload = true;
    const Biquaternion base =
        io::biquaternion_from_json(load_json_arg(args.vector_text, "--vector"));
    const FourVector v = four_vector_from(base, Variance::contravariant);
    report.inputs["vector"] = io::to_json(base);
    const FourVector moved = transform_contravariant(v, gen);
    report.outputs["vector"] = io::to_json(moved.base);
    const cplx n_before = minkowski_norm(v);
    const cplx n_after = minkowski_norm(moved);
    report.outputs["minkowski_norm_before"] = n_before.real();
    report.outputs["minkowski_norm_after"] = n_after.real();
    const double drift = std::abs(n_after - n_before);
    report.residuals["minkowski_drift"] = drift;
    // Independent covariant-transport route: (R v R†)* = R* v* R̃.
    const FourVector co =
        transform_covariant(conj_variance(v), gen);
    const double transport =
        max_abs_diff(co.base, conj_variance(moved).base);
    report.residuals["covariant_transport"] = transport;
    all_ok = all_ok && drift < tol && transport < tol;
  }

  if (rotate_surface && !args.pure_text.empty()) {
    have_payload = true;
    const Vec3 u = io::vec3_from_json(load_json_arg(args.pure_text, "--pure"), "--pure");
    const Vec3 axis =
        io::vec3_from_json(load_json_arg(args.axis_text, "--axis"), "--axis");
    const Vec3 unit_axis = (1.0 / norm(axis)) * axis;
    const Biquaternion rotated = rotate_vector(pure(u), unit_axis, args.angle);
    report.inputs["pure"] = vec3_json(u);
    report.outputs["pure_rotated"] = io::to_json(rotated);
    // Cross-check through the four-vector route (rotations fix v⁰ = 0); the
    // four-vector packages the spatial part as i·u⃗.
    const FourVector as_vec = four_vector(0.0, u);
    const double cross_route =
        max_abs_diff(transform_contravariant(as_vec, gen).base,
                     cplx(0.0, 1.0) * rotated);
    report.residuals["pure_vs_vector_route"] = cross_route;
    all_ok = all_ok && cross_route < tol;
  }

  if (!args.left_text.empty() || !args.right_text.empty()) {
    have_payload = true;
    SpinorComponents lc{1.0, 0.0};
    SpinorComponents rc{0.0, 1.0};
    if (!args.left_text.empty()) {
      lc = io::spinor_components_from_json(load_json_arg(args.left_text, "--left"));
    }
    if (!args.right_text.empty()) {
      rc = io::spinor_components_from_json(load_json_arg(args.right_text, "--right"));
    }
    report.inputs["left"] = io::to_json(lc);
    report.inputs["right"] = io::to_json(rc);
    const ChiralSpinorPair pair{make_left(lc.xi, lc.chi), make_right(rc.xi, rc.chi)};
    const ChiralSpinorPair moved = lorentz_transform(pair, gen);
    report.outputs["left"] =
        io::to_json(extract_components(moved.left, Chirality::left));
    report.outputs["right"] =
        io::to_json(extract_components(moved.right, Chirality::right));
    // Ideal preservation under transport.
    const double ideal = std::max(
        max_abs_diff(moved.left * proj_right, Biquaternion{}),
        max_abs_diff(moved.right * proj_left, Biquaternion{}));
    report.residuals["ideal_preservation"] = ideal;
    all_ok = all_ok && ideal < tol;
  }

  // The full-turn sign flip, reported on a reference spinor about the
  // rotation axis of this generator (skipped for pure boosts).
  const double kappa_len = norm(gen.kappa);
  if (kappa_len > 1e-12) {
    const Vec3 axis = (2.0 * std::numbers::pi / kappa_len) * gen.kappa;
    const LorentzGenerator full_turn{axis, {0.0, 0.0, 0.0}};
    const ChiralSpinorPair ref{make_left(1.0, 0.0), make_right(0.0, 1.0)};
    const ChiralSpinorPair turned = lorentz_transform(ref, full_turn);
    const double flip = std::max(max_abs_diff(turned.left, -ref.left),
                                 max_abs_diff(turned.right, -ref.right));
    report.outputs["two_pi_sign_flipped"] = flip < tol;
    report.residuals["two_pi_sign_flip"] = flip;
    all_ok = all_ok && flip < tol;
  }

  if (!have_payload) {
    throw validation_error(std::string(name) +
                           ": provide --vector, --left/--right, or --pure");
  }
  report.passed = all_ok;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

// --------------------------------------------------------------------------
// dirac.
// --------------------------------------------------------------------------

int run_dirac(const std::string& spec_text, const FieldFlags& field_flags,
              const std::string& point_text, const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = flags.tolerance(1e-8, 1e-5);
  io::CommandReport report;
  report.command = "dirac";
  report.tolerances["residual"] = tol;
  report.tolerances["matrix_match"] = tol;

  PlaneWaveSpec spec;
  spec.momentum = {0.3, -0.2, 0.5};
  spec.mass = 1.0;
  Biquaternion left_amp = make_left(1.0, 0.0);
  bool energy_given = false;
  if (!spec_text.empty()) {
    const json j = load_json_arg(spec_text, "--spec");
    if (!j.is_object()) throw validation_error("--spec: expected an object");
    if (j.contains("momentum")) {
      spec.momentum = io::vec3_from_json(j["momentum"], "momentum");
    }
    if (j.contains("mass")) {
      if (!j["mass"].is_number()) throw validation_error("--spec: mass must be a number");
      spec.mass = j["mass"].get<double>();
    }
    if (j.contains("energy")) {
      if (!j["energy"].is_number())
        throw validation_error("--spec: energy must be a number");
      spec.energy = j["energy"].get<double>();
      energy_given = true;
    }
    if (j.contains("left")) {
      const SpinorComponents c = io::spinor_components_from_json(j["left"]);
      left_amp = make_left(c.xi, c.chi);
    }
  }
  if (!energy_given) {
    spec.energy =
        std::sqrt(spec.mass * spec.mass + dot(spec.momentum, spec.momentum));
  }
  if (euclidean_norm(left_amp) == 0.0) {
    throw validation_error("--spec: left amplitude must be nonzero");
  }
  spec.amplitudes = solve_plane_wave_amplitudes(
      spec.energy, spec.momentum,
      spec.mass, (1.0 / euclidean_norm(left_amp)) * left_amp);

  report.inputs["energy"] = spec.energy;
  report.inputs["momentum"] = vec3_json(spec.momentum);
  report.inputs["mass"] = spec.mass;
  report.outputs["on_shell"] = on_shell(spec, 1e-9);

  Point4 x = kSamplePoint;
  if (!point_text.empty()) {
    x = io::point4_from_json(load_json_arg(point_text, "--point"));
  }
  report.inputs["point"] = point_to_json(x);

  BiquatField a = field_flags.build(report.inputs);
  ChiralFieldPair pair = plane_wave_fields(spec);
  if (flags.fd()) {
    a = a.with_fd_backend();
    pair = ChiralFieldPair{pair.left.with_fd_backend(), pair.right.with_fd_backend()};
  }

  const DiracResiduals res = dirac_residuals(pair, a, spec.mass, x);
  const double left_norm = euclidean_norm(res.left);
  const double right_norm = euclidean_norm(res.right);
  report.residuals["left_equation"] = left_norm;
  report.residuals["right_equation"] = right_norm;

  const DiracResiduals split =
      dirac_residuals(pair, a, spec.mass, x, DiracPath::split);
  const double path_agreement = std::max(max_abs_diff(res.left, split.left),
                                         max_abs_diff(res.right, split.right));
  report.residuals["split_path_agreement"] = path_agreement;

  const Col4 weyl = weyl_dirac_residual(pair, a, spec.mass, x);
  const double weyl_match =
      std::max(max_abs(spinor_to_column(res.right, Chirality::right, 1e-6) -
                       weyl.upper),
               max_abs(spinor_to_column(res.left, Chirality::left, 1e-6) -
                       weyl.lower));
  report.residuals["matrix_oracle_match"] = weyl_match;

  if (norm(spec.momentum) == 0.0) {
    report.outputs["rest_frame_left_equals_right_elevated"] =
        max_abs_diff(spec.amplitudes.left, spec.amplitudes.right * jhat);
  }

  report.passed = left_norm < tol && right_norm < tol && weyl_match < tol &&
                  path_agreement < tol;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

// --------------------------------------------------------------------------
// pauli.
// --------------------------------------------------------------------------

int run_pauli(const FieldFlags& field_flags, double mass, const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = flags.tolerance(1e-10, 1e-10);
  io::CommandReport report;
  report.command = "pauli";
  report.tolerances["spectrum"] = tol;
  if (field_flags.family != "constant_B") {
    throw validation_error("pauli: only --field constant_B is supported");
  }
  const Vec3 b =
      io::vec3_from_json(load_json_arg(field_flags.b_text, "--b"), "--b");
  report.inputs["b"] = vec3_json(b);
  report.inputs["mass"] = mass;

  const PauliSpectrum s = pauli_constant_b_spectrum(b, mass);
  report.outputs["level_up"] = s.up;
  report.outputs["level_down"] = s.down;
  report.outputs["splitting"] = s.up - s.down;
  report.outputs["matrix_level_up"] = s.oracle_up;
  report.outputs["matrix_level_down"] = s.oracle_down;
  report.residuals["spectrum_vs_matrix"] = s.max_diff;
  report.passed = s.max_diff < tol;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

// --------------------------------------------------------------------------
// maxwell.
// --------------------------------------------------------------------------

int run_maxwell(const FieldFlags& field_flags, int samples, const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = flags.tolerance(1e-8, 1e-6);
  io::CommandReport report;
  report.command = "maxwell";
  report.tolerances["residual"] = tol;
  report.inputs["samples"] = samples;

  const BiquatField a_exact = field_flags.build(report.inputs);
  const BiquatField a = flags.fd() ? a_exact.with_fd_backend() : a_exact;

  // Sourced families verify ∂̃Φ = j against the derived source; vacuum
  // families verify against j = 0.
  const bool derive_source = field_flags.family == "custom_polynomial";
  const BiquatField phi_field = field_strength_field(a_exact);
  const BiquatField j =
      derive_source ? BiquatField::finite_difference(
                          [phi_field](const Point4& p) {
                            return quat_derivative_tilde(phi_field, p);
                          })
                    : em_zero();

  std::mt19937 rng(flags.seed);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  double worst = 0.0;
  json table = json::array();
  for (int n = 0; n < samples; ++n) {
    // Points kept away from the origin so the coulomb family stays outside
    // its exclusion radius.
    const Point4 p{u(rng), u(rng), u(rng), u(rng)};
    const MaxwellComponents c = expand_to_real(maxwell_residual(a, j, p));
    json row;
    row["point"] = point_to_json(p);
    row["gauss"] = c.gauss;
    row["faraday"] = vec3_json(c.faraday);
    row["monopole"] = c.monopole;
    row["ampere"] = vec3_json(c.ampere);
    table.push_back(row);
    worst = max3(worst, std::abs(c.gauss), std::abs(c.monopole));
    worst = max3(worst, norm(c.faraday), norm(c.ampere));
    if (n == 0) {
      const FieldStrengthReport phi = field_strength(a, p);
      report.outputs["b_field_at_first_point"] = vec3_json(b_field(phi.value));
      report.outputs["e_field_at_first_point"] = vec3_json(e_field(phi.value));
      report.outputs["lorentz_condition_ok"] = phi.lorentz_condition_ok;
      if (derive_source) {
        const ClassicalSource src = classical_source(j.value(p));
        json source;
        source["rho"] = src.rho;
        source["current"] = vec3_json(src.current);
        report.outputs["derived_source_at_first_point"] = source;
      }
    }
  }
  report.outputs["component_table"] = table;
  report.residuals["worst_component"] = worst;
  report.passed = worst < tol;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

// --------------------------------------------------------------------------
// cpt.
// --------------------------------------------------------------------------

int run_cpt(const std::string& spinor_text, const std::string& point_text,
            const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = flags.tolerance(1e-14, 1e-14);
  io::CommandReport report;
  report.command = "cpt";
  report.tolerances["composition"] = tol;

  std::mt19937 rng(flags.seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  auto rc = [&] { return cplx(u(rng), u(rng)); };
  Biquaternion psi{rc(), rc(), rc(), rc()};
  if (!spinor_text.empty()) {
    psi = io::biquaternion_from_json(load_json_arg(spinor_text, "--spinor"));
  }
  Point4 x{u(rng), u(rng), u(rng), u(rng)};
  if (!point_text.empty()) {
    x = io::point4_from_json(load_json_arg(point_text, "--point"));
  }
  report.inputs["spinor"] = io::to_json(psi);
  report.inputs["point"] = point_to_json(x);

  const SymmetryAction t = apply_T(psi, x);
  const SymmetryAction pt = apply_P(t.value, t.point);
  const SymmetryAction cpt = apply_C(pt.value, pt.point);
  const SymmetryAction direct = apply_CPT(psi, x);

  report.outputs["value"] = io::to_json(cpt.value);
  report.outputs["point"] = point_to_json(cpt.point);
  const double vs_khat = max_abs_diff(cpt.value, psi * khat);
  const double vs_direct = std::max(
      max_abs_diff(cpt.value, direct.value),
      max3(std::abs(cpt.point.t - direct.point.t),
           std::abs(cpt.point.x - direct.point.x),
           std::max(std::abs(cpt.point.y - direct.point.y),
                    std::abs(cpt.point.z - direct.point.z))));
  const double arg_negation =
      max3(std::abs(cpt.point.t + x.t), std::abs(cpt.point.x + x.x),
           std::max(std::abs(cpt.point.y + x.y), std::abs(cpt.point.z + x.z)));
  report.residuals["composition_vs_right_khat"] = vs_khat;
  report.residuals["composition_vs_combined"] = vs_direct;
  report.residuals["argument_negation"] = arg_negation;
  report.passed = vs_khat < tol && vs_direct < tol && arg_negation < tol;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

// --------------------------------------------------------------------------
// vary.
// --------------------------------------------------------------------------

json equation_lines(const std::string& header, const ExteriorElement& eq) {
  json lines = json::array();
  lines.push_back(header);
  std::istringstream body(to_string(eq));
  for (std::string line; std::getline(body, line);) lines.push_back(line);
  return lines;
}

int run_vary(double mass, const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  io::CommandReport report;
  report.command = "vary";
  report.inputs["mass"] = mass;
  report.tolerances["equation_match"] = 0.0;

  const DiracVariation var = vary_dirac_lagrangian(mass);

  // The equations the variation must land on, constructed directly.
  const cplx i_unit(0.0, 1.0);
  const ExteriorElement expected_left =
      ext_generator(gen_kinL, i_unit * one) -
      (ext_generator(gen_xiR, mass * proj_left) +
       ext_generator(gen_chiR, mass * (jhat * proj_left)));
  const ExteriorElement expected_right =
      ext_generator(gen_kinR, i_unit * one) +
      (ext_generator(gen_xiL, mass * (jhat * proj_right)) -
       ext_generator(gen_chiL, mass * proj_right));

  const double diff = std::max(max_abs_diff(var.left_eq, expected_left),
                               max_abs_diff(var.right_eq, expected_right));
  report.outputs["left"] = equation_lines("left: iDψ_L − mψ_Rĵ = 0", var.left_eq);
  report.outputs["right"] =
      equation_lines("right: iD̃ψ_R + mψ_Lĵ = 0", var.right_eq);
  report.residuals["derived_vs_constructed"] = diff;
  report.passed = diff == 0.0;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

// --------------------------------------------------------------------------
// selftest.
// --------------------------------------------------------------------------

int run_selftest(const GlobalFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  io::CommandReport report;
  report.command = "selftest";

  std::mt19937 rng(flags.seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  auto rc = [&] { return cplx(u(rng), u(rng)); };
  auto rq = [&] { return Biquaternion{rc(), rc(), rc(), rc()}; };
  auto rv = [&] { return Vec3{u(rng), u(rng), u(rng)}; };

  bool ok = true;
  auto record = [&](const char* name, double value, double limit) {
    report.residuals[name] = value;
    report.tolerances[name] = limit;
    ok = ok && (limit == 0.0 ? value == 0.0 : value < limit);
  };

  double w = 0.0;
  for (int n = 0; n < 50; ++n) {
    const Biquaternion a = rq();
    const Biquaternion b = rq();
    w = std::max(w, max_abs_diff(to_matrix(a * b), to_matrix(a) * to_matrix(b)));
    w = std::max(w, std::abs(det(to_matrix(a)) - qnorm(a)));
  }
  record("matrix_isomorphism", w, 1e-12);

  record("projector_algebra",
         max3(max_abs_diff(proj_left * proj_left, proj_left),
              max_abs_diff(proj_left + proj_right, one),
              max_abs_diff(proj_left * proj_right, Biquaternion{})),
         0.0);

  w = 0.0;
  for (int n = 0; n < 50; ++n) {
    const LorentzGenerator g{rv(), rv()};
    const FourVector v = four_vector(u(rng), rv());
    w = std::max(w, std::abs(minkowski_norm(transform_contravariant(v, g)) -
                             minkowski_norm(v)));
  }
  record("minkowski_invariance", w, 1e-9);

  PlaneWaveSpec spec;
  spec.momentum = {0.3, -0.2, 0.5};
  spec.mass = 1.0;
  spec.energy = std::sqrt(1.0 + dot(spec.momentum, spec.momentum));
  spec.amplitudes = solve_plane_wave_amplitudes(spec.energy, spec.momentum, 1.0,
                                                make_left(0.8, cplx(0.1, 0.5)));
  const ChiralFieldPair pair = plane_wave_fields(spec);
  const DiracResiduals res = dirac_residuals(pair, em_zero(), 1.0, kSamplePoint);
  record("free_wave_residual",
         std::max(euclidean_norm(res.left), euclidean_norm(res.right)), 1e-10);

  const PauliSpectrum s = pauli_constant_b_spectrum({0.0, 0.0, 1.0}, 1.0);
  record("pauli_spectrum",
         max3(s.max_diff, std::abs(s.up - 0.5), std::abs(s.down + 0.5)), 1e-10);

  const BiquatField wave = em_plane_wave({0.0, 0.7, 0.0}, {0.0, 0.0, 1.0}, 0.1);
  record("vacuum_maxwell",
         euclidean_norm(maxwell_residual(wave, em_zero(), kSamplePoint)), 1e-10);

  w = 0.0;
  for (int n = 0; n < 20; ++n) {
    const ChiralSpinorPair sp{make_left(rc(), rc()), make_right(rc(), rc())};
    w = std::max(
        w, max_abs_diff(current(sp).base,
                        current_components(
                            extract_components(sp.left, Chirality::left),
                            extract_components(sp.right, Chirality::right))
                            .base));
  }
  record("current_components", w, 1e-11);

  w = 0.0;
  for (int n = 0; n < 20; ++n) {
    const Biquaternion psi = rq();
    const Point4 x{u(rng), u(rng), u(rng), u(rng)};
    const SymmetryAction t = apply_T(psi, x);
    const SymmetryAction pt = apply_P(t.value, t.point);
    const SymmetryAction cpt = apply_C(pt.value, pt.point);
    w = std::max(w, max_abs_diff(cpt.value, psi * khat));
  }
  record("cpt_composition", w, 1e-13);

  const DiracVariation var = vary_dirac_lagrangian(0.5);
  const ExteriorElement expected_left =
      ext_generator(gen_kinL, cplx(0.0, 1.0) * one) -
      (ext_generator(gen_xiR, 0.5 * proj_left) +
       ext_generator(gen_chiR, 0.5 * (jhat * proj_left)));
  record("variation_left_equation", max_abs_diff(var.left_eq, expected_left), 0.0);

  report.outputs["checks"] = static_cast<int>(report.residuals.size());
  report.passed = ok;
  finish(report, flags, t0);
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biquaternion relativistic quantum mechanics toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--backend", flags.backend, "derivative backend")
      ->check(CLI::IsMember({"analytic", "fd"}));
  app.add_option("--tol", flags.tol, "override the command's pass tolerance");
  app.add_option("--seed", flags.seed, "seed for sampled points");
  app.add_flag("--gaussian-units", flags.gaussian_units,
               "annotate the report with gaussian-unit display conventions");

  TransformArgs boost_args;
  CLI::App* boost = app.add_subcommand("boost", "transform a four-vector or spinor");
  boost->fallthrough();
  boost->add_option("--generator", boost_args.generator_text,
                    "{\"kappa\": [x,y,z], \"lambda\": [x,y,z]}");
  boost->add_option("--vector", boost_args.vector_text, "four-vector, biquaternion shape");
  boost->add_option("--left", boost_args.left_text, "{\"xi\": [re,im], \"chi\": [re,im]}");
  boost->add_option("--right", boost_args.right_text, "{\"xi\": [re,im], \"chi\": [re,im]}");

  TransformArgs rotate_args;
  rotate_args.axis_text = "[0.0, 0.0, 1.0]";
  CLI::App* rotate = app.add_subcommand("rotate", "rotate a vector or spinor");
  rotate->fallthrough();
  rotate->add_option("--generator", rotate_args.generator_text,
                     "{\"kappa\": [x,y,z], \"lambda\": [x,y,z]} (overrides --axis)");
  rotate->add_option("--axis", rotate_args.axis_text, "rotation axis [x, y, z]");
  rotate->add_option("--angle", rotate_args.angle, "rotation angle, radians");
  rotate->add_option("--pure", rotate_args.pure_text, "pure vector payload [x, y, z]");
  rotate->add_option("--vector", rotate_args.vector_text, "four-vector payload");
  rotate->add_option("--left", rotate_args.left_text, "left spinor components");
  rotate->add_option("--right", rotate_args.right_text, "right spinor components");

  std::string dirac_spec;
  std::string dirac_point;
  FieldFlags dirac_field;
  CLI::App* dirac = app.add_subcommand("dirac", "plane-wave residuals vs the matrix oracle");
  dirac->fallthrough();
  dirac->add_option("--spec", dirac_spec,
                    "{\"momentum\": [..], \"mass\": m, \"energy\": E?, \"left\": {..}?}");
  dirac->add_option("--point", dirac_point, "evaluation point {\"t\":..,\"x\":..,..}");
  dirac_field.attach(dirac, "none");

  FieldFlags pauli_field;
  double pauli_mass = 1.0;
  CLI::App* pauli = app.add_subcommand("pauli", "constant-field spectrum vs the 2x2 oracle");
  pauli->fallthrough();
  pauli_field.attach(pauli, "constant_B");
  pauli->add_option("--mass", pauli_mass, "fermion mass");

  FieldFlags maxwell_field;
  int maxwell_samples = 5;
  CLI::App* maxwell = app.add_subcommand("maxwell", "quaternionic Maxwell residuals");
  maxwell->fallthrough();
  maxwell_field.attach(maxwell, "plane_wave_em");
  maxwell->add_option("--samples", maxwell_samples, "number of sample points")
      ->check(CLI::PositiveNumber);

  std::string cpt_spinor;
  std::string cpt_point;
  CLI::App* cpt = app.add_subcommand("cpt", "discrete-symmetry composition check");
  cpt->fallthrough();
  cpt->add_option("--spinor", cpt_spinor, "biquaternion JSON (default: seeded random)");
  cpt->add_option("--point", cpt_point, "spacetime point (default: seeded random)");

  double vary_mass = 1.0;
  CLI::App* vary = app.add_subcommand("vary", "derive the field equations by variation");
  vary->fallthrough();
  vary->add_option("--mass", vary_mass, "mass parameter of the Lagrangian");

  CLI::App* selftest = app.add_subcommand("selftest", "condensed verification battery");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (boost->parsed()) return run_transform("boost", boost_args, flags);
    if (rotate->parsed()) return run_transform("rotate", rotate_args, flags);
    if (dirac->parsed()) return run_dirac(dirac_spec, dirac_field, dirac_point, flags);
    if (pauli->parsed()) return run_pauli(pauli_field, pauli_mass, flags);
    if (maxwell->parsed()) return run_maxwell(maxwell_field, maxwell_samples, flags);
    if (cpt->parsed()) return run_cpt(cpt_spinor, cpt_point, flags);
    if (vary->parsed()) return run_vary(vary_mass, flags);
    if (selftest->parsed()) return run_selftest(flags);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  std::fprintf(stderr, "error: no command selected\n");
  return 2;
}
