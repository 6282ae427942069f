// Spacetime fields with analytic or finite-difference derivative access.
//
// A BiquatField wraps an evaluation closure (t,x,y,z) → Biquaternion and,
// when available, analytic closures for the first and second coordinate
// partials.  When a derivative closure is absent, central finite differences
// with step h (default 1e-4) fill in; every field records which backend its
// derivatives come from so reports can state it.
//
// Built-in electromagnetic potential families (all hermitean four-vector
// valued, A = A⁰ + iA⃗, with analytic derivatives):
//   em_plane_wave        A⃗ = ε⃗ a cos(k⃗·x⃗ − ωt + φ₀), ω = |k⃗|, ε⃗ ⊥ k⃗, A⁰ = 0
//   em_constant_b        A⃗ = ½ B⃗ × r⃗ (symmetric gauge), A⁰ = 0
//   em_coulomb           A⁰ = q/r outside an exclusion radius, A⃗ = 0
//   em_pure_gauge        A = ∂ᵗφ − i∇⃗φ for a polynomial φ (zero field strength)
//   em_custom_polynomial four independent polynomial components
//
// Spinor plane waves ψ(x) = amp · e^{−i(Et − p⃗·x⃗)} carry analytic
// derivatives as well; solve_plane_wave_amplitudes produces a right-handed
// amplitude matching a given left-handed one on the mass shell.

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "biquat/biquaternion.hpp"
#include "biquat/spinor.hpp"

namespace biquat {

/// Thrown when a field is evaluated where it is not defined (e.g. inside a
/// Coulomb exclusion radius) or when finite differences produce non-finite
/// values.
struct field_domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

enum class DerivBackend { analytic, fd };

class BiquatField {
 public:
  using Fn = std::function<Biquaternion(const Point4&)>;
  using PartialFn = std::function<Biquaternion(int, const Point4&)>;          // ∂_μ
  using SecondFn = std::function<Biquaternion(int, int, const Point4&)>;      // ∂_μ∂_ν

  BiquatField() = default;

  /// Field with analytic first (and optionally second) derivatives.
  static BiquatField analytic(Fn value, PartialFn partial, SecondFn second = nullptr);

  /// Field differentiated by central finite differences of step h.
  static BiquatField finite_difference(Fn value, double h = 1e-4);

  Biquaternion value(const Point4& p) const;
  /// ∂_μ with μ ∈ {0,1,2,3} ↦ (t,x,y,z).  Throws field_domain_error on
  /// non-finite finite-difference results.
  Biquaternion partial(int mu, const Point4& p) const;
  Biquaternion second_partial(int mu, int nu, const Point4& p) const;

  DerivBackend backend() const { return backend_; }
  double step() const { return h_; }

  /// Same values, derivatives forced through finite differences — used to
  /// compare backends and for the CLI's --backend fd mode.
  BiquatField with_fd_backend(double h = 1e-4) const;

 private:
  Fn value_;
  PartialFn partial_;
  SecondFn second_;
  DerivBackend backend_{DerivBackend::fd};
  double h_{1e-4};
};

/// u + v, s·u, c·u, u·c (pointwise), preserving analytic derivatives.
BiquatField field_add(const BiquatField& u, const BiquatField& v);
BiquatField field_scale(cplx s, const BiquatField& u);
BiquatField field_lmul(const Biquaternion& c, const BiquatField& u);
BiquatField field_rmul(const BiquatField& u, const Biquaternion& c);
BiquatField field_constant(const Biquaternion& c);

// ---------------------------------------------------------------------------
// Real polynomials in (t, x, y, z) — the analytic scalar building block for
// gauge functions and custom potentials.
// ---------------------------------------------------------------------------

struct PolyTerm {
  double coeff{0.0};
  int pt{0}, px{0}, py{0}, pz{0};  // exponents of t, x, y, z
};

struct Polynomial {
  std::vector<PolyTerm> terms;

  double eval(const Point4& p) const;
  double partial(int mu, const Point4& p) const;
  double second_partial(int mu, int nu, const Point4& p) const;
};

// ---------------------------------------------------------------------------
// Electromagnetic potentials (hermitean four-vector fields).
// ---------------------------------------------------------------------------

BiquatField em_zero();

/// Transverse plane wave; throws validation_error unless ε⃗·k⃗ = 0 and k⃗ ≠ 0.
BiquatField em_plane_wave(Vec3 k, Vec3 polarization, double amplitude, double phase0 = 0.0);

/// Symmetric gauge for a constant magnetic field: A⃗ = ½ B⃗ × r⃗.
BiquatField em_constant_b(Vec3 b);

/// A⁰ = q/r; evaluation inside r <= exclusion throws field_domain_error.
BiquatField em_coulomb(double q, double exclusion = 1e-3);

/// A^μ = ∂^μφ = (∂ₜφ, −∇⃗φ): quaternion form ∂ₜφ − i∇⃗φ.  Zero field strength.
BiquatField em_pure_gauge(const Polynomial& phi);

/// Four independent polynomial components A⁰..A³.
BiquatField em_custom_polynomial(const std::array<Polynomial, 4>& components);

/// A → A + ∂ᵗφ-form gauge shift (same combination as em_pure_gauge).
BiquatField em_gauge_shift(const BiquatField& a, const Polynomial& phi);

// ---------------------------------------------------------------------------
// Spinor fields.
// ---------------------------------------------------------------------------

struct ChiralFieldPair {
  BiquatField left, right;
};

struct PlaneWaveSpec {
  double energy{1.0};
  Vec3 momentum;
  double mass{1.0};
  ChiralSpinorPair amplitudes;
};

/// |E² − p⃗² − m²| <= tol.
bool on_shell(const PlaneWaveSpec& spec, double tol = 1e-9);

/// amp · e^{−i(Et − p⃗·x⃗)} for both chiralities, analytic derivatives.
ChiralFieldPair plane_wave_fields(const PlaneWaveSpec& spec);

/// Given the left-handed amplitude, returns the pair whose right-handed
/// amplitude solves the free Dirac system at (E, p⃗, m):
/// ψ_R = (−E + ip⃗)·ψ_L·ĵ / m.  Requires m > 0.
ChiralSpinorPair solve_plane_wave_amplitudes(double energy, Vec3 momentum, double mass,
                                             const Biquaternion& left_amplitude);

/// Gaussian packet with fixed frequency: amp · e^{−iωt} e^{−|x⃗|²/(2 s²)};
/// analytic first and second derivatives (used by the large-mass analysis).
BiquatField gaussian_packet(const Biquaternion& amp, double omega, double sigma);

/// ψ → e^{iφ(x)}ψ for polynomial φ, derivatives by the product rule.
BiquatField spinor_gauge_phase(const BiquatField& psi, const Polynomial& phi);

}  // namespace biquat
