// Dynamics of the quaternionic Dirac system and the quaternionic form of
// electromagnetism, working in natural units ℏ = c = 1 with the charge
// absorbed into the potential.
//
// Derivative operators (units act by LEFT multiplication, componentwise on
// the field):
//
//   ∂ψ  = ∂₀ψ + i(î ∂_x + ĵ ∂_y + k̂ ∂_z)ψ,
//   ∂̃ψ  = ∂₀ψ − i(î ∂_x + ĵ ∂_y + k̂ ∂_z)ψ.
//
// With a hermitean gauge potential A = A⁰ + iA⃗, the long derivatives are
//
//   Dψ_L = (∂ − iA*)ψ_L           (left ideal),
//   D̃ψ_R = (∂̃ − iA)ψ_R           (right ideal),
//
// and the Dirac system reads  iDψ_L = mψ_Rĵ,  iD̃ψ_R = −mψ_Lĵ.  Expanding
// the units gives the equivalent split forms
//
//   iDψ_L = i∂₀ψ_L + A⁰ψ_L − (∇⃗ + iA⃗)ψ_L,
//   iD̃ψ_R = i∂₀ψ_R + A⁰ψ_R + (∇⃗ + iA⃗)ψ_R,      ∇⃗ = î∂_x + ĵ∂_y + k̂∂_z,
//
// evaluated here as an independent cross-check path.  In the standard
// representation ζ = (ψ_L + ψ_Rĵ)/√2, η = (ψ_L − ψ_Rĵ)/√2 the system
// becomes
//
//   i∂₀ζ + A⁰ζ − (∇⃗ + iA⃗)η − mζ = 0,
//   i∂₀η + A⁰η − (∇⃗ + iA⃗)ζ + mη = 0,
//
// related to the chiral residuals by (plus, minus) = ((left ± right·ĵ)/√2).
// Removing the rest-energy phase ψ → e^{−imt}ψ̂ deletes the mass term from
// the first equation and doubles it in the second; substituting the
// constrained ψ̂₋ = (∇⃗+iA⃗)ψ̂₊/(2m) reduces the first equation to the Pauli
// equation
//
//   i∂₀ψ̂₊ = [ −{∇⃗+iA⃗}²/(2m) + iB⃗/(2m) − A⁰ ] ψ̂₊,
//
// using the operator identity (∇⃗+iA⃗)² = −{∇⃗+iA⃗}² + iB⃗ with B⃗ = ∇×A⃗
// (i B⃗ stands for i(B_x î + B_y ĵ + B_z k̂) acting by left multiplication).
//
// The electromagnetic current of a spinor pair is
//
//   j = 2(ψ_L ψ_L† + ψ_R* ψ̃_R),
//
// a hermitean four-vector.  The overall normalization is fixed here by
// requiring j⁰ ≥ 0 (so that j⁰ is a density: single-chirality states give
// j⁰ = |ξ|² + |χ|²); its sign relative to Lagrangian conventions that order
// anticommuting factors differently is a documented choice.  The current is
// exactly gauge invariant and transforms as a contravariant four-vector.
//
// The field strength of A is the scalar-free combination
//
//   Φ = −(∂A − Ã∂̃)/2 = B⃗ + iE⃗,     B⃗ = ∇×A⃗,  E⃗ = −∇A⁰ − ∂ₜA⃗,
//
// where Ã∂̃ multiplies the conjugated units from the RIGHT (componentwise
// partials of Ã times 1, −î, −ĵ, −k̂).  In Lorentz gauge (∂₀A⁰ + ∇·A⃗ = 0)
// it reduces to Φ = −∂A.  Maxwell's equations collapse to  ∂̃Φ = j  whose
// eight real components reproduce Gauss, Faraday, no-monopole and
// Ampère–Maxwell laws; expand_to_real labels them.

#pragma once

#include <vector>

#include "biquat/fields.hpp"
#include "biquat/matrix2.hpp"
#include "biquat/spinor.hpp"

namespace biquat {

/// ∂ψ and ∂̃ψ at x.
Biquaternion quat_derivative(const BiquatField& psi, const Point4& x);
Biquaternion quat_derivative_tilde(const BiquatField& psi, const Point4& x);

/// Long derivative; chirality selects D (left) or D̃ (right).
/// Validates that A is hermitean at x.
Biquaternion long_derivative(const BiquatField& psi, const BiquatField& a,
                             const Point4& x, Chirality chirality);

// ---------------------------------------------------------------------------
// Dirac residuals.
// ---------------------------------------------------------------------------

enum class DiracPath { compact, split };

struct DiracResiduals {
  Biquaternion left;   // iDψ_L − mψ_Rĵ
  Biquaternion right;  // iD̃ψ_R + mψ_Lĵ
};

DiracResiduals dirac_residuals(const ChiralFieldPair& pair, const BiquatField& a,
                               double mass, const Point4& x,
                               DiracPath path = DiracPath::compact);

/// ζ = (ψ_L + ψ_Rĵ)/√2 and η = (ψ_L − ψ_Rĵ)/√2 as fields.
struct StandardFieldPair {
  BiquatField zeta, eta;
};
StandardFieldPair to_standard_fields(const ChiralFieldPair& pair);

struct StandardResiduals {
  Biquaternion plus;   // i∂₀ζ + A⁰ζ − (∇⃗+iA⃗)η − mζ
  Biquaternion minus;  // i∂₀η + A⁰η − (∇⃗+iA⃗)ζ + mη
};

/// With mass_phase_removed the fields are understood as ψ̂ = e^{+imt}ψ: the
/// mass term disappears from `plus` and doubles in `minus`.
StandardResiduals standard_rep_residuals(const StandardFieldPair& fields,
                                         const BiquatField& a, double mass,
                                         const Point4& x,
                                         bool mass_phase_removed = false);

// ---------------------------------------------------------------------------
// Pauli reduction.
// ---------------------------------------------------------------------------

/// Single application (∇⃗ + iA⃗)ψ at x.
Biquaternion grad_plus_ia_apply(const BiquatField& psi, const BiquatField& a,
                                const Point4& x);
/// Double application (∇⃗ + iA⃗)²ψ via second partials.
Biquaternion grad_plus_ia_square(const BiquatField& psi, const BiquatField& a,
                                 const Point4& x);
/// Scalar-product square {∇⃗ + iA⃗}²ψ = Σ_k (∂_k + iA_k)²ψ.
Biquaternion scalar_square_apply(const BiquatField& psi, const BiquatField& a,
                                 const Point4& x);
/// Right-hand side of the Pauli equation:
///   [−{∇⃗+iA⃗}²/(2m) + iB⃗/(2m) − A⁰] ψ at x.
Biquaternion pauli_apply(const BiquatField& psi_plus, const BiquatField& a,
                         double mass, const Point4& x);

/// Constant-B spectrum on the spin-up/down states of the left ideal versus
/// the 2×2 Pauli Hamiltonian σ⃗·B⃗/(2m).
struct PauliSpectrum {
  double up;         // eigenvalue of pauli_apply on the spin-up state
  double down;       // …and on the spin-down state
  double oracle_up;  // matrix eigenvalues of σ⃗·B⃗/(2m), sorted to match
  double oracle_down;
  double max_diff;   // worst |quaternionic − matrix| including eigenvector residuals
};
PauliSpectrum pauli_constant_b_spectrum(Vec3 b, double mass);

/// Non-relativistic reduction: with ψ̂₋ = (∇⃗+iA⃗)ψ̂₊/(2m), the first
/// standard-representation equation becomes exactly the Pauli residual and
/// the second collapses to  i∂₀ψ̂₋ + A⁰ψ̂₋  which decays as 1/m.
struct NonrelReport {
  std::vector<double> masses;
  std::vector<double> second_residual;  // Euclidean norm at x per mass
  std::vector<double> first_vs_pauli;   // |first residual − Pauli residual| per mass
  double fitted_order{0.0};             // least-squares slope of −log r vs log m
  DerivBackend backend{DerivBackend::analytic};
};
NonrelReport nonrel_limit_order(const BiquatField& psi_plus, const BiquatField& a,
                                const std::vector<double>& masses, const Point4& x);

// ---------------------------------------------------------------------------
// Current.
// ---------------------------------------------------------------------------

/// j = 2(ψ_Lψ_L† + ψ_R*ψ̃_R) as a contravariant four-vector.
FourVector current(const ChiralSpinorPair& pair);

/// Independent component-expansion evaluation from (ξ, χ) pairs:
///   j⁰ = |ξ_L|²+|χ_L|² + |ξ_R|²+|χ_R|²
///   j¹ = (ξ_L*χ_L + χ_L*ξ_L) − (ξ_R*χ_R + χ_R*ξ_R)
///   j² = i(χ_L*ξ_L − ξ_L*χ_L) − i(χ_R*ξ_R − ξ_R*χ_R)
///   j³ = (|ξ_L|²−|χ_L|²) − (|ξ_R|²−|χ_R|²)
FourVector current_components(const SpinorComponents& left,
                              const SpinorComponents& right);

/// Standard-representation form [(ζζ†+ηη†) + c.c.] + [(ζη†+ηζ†) − c.c.].
FourVector current_standard(const Biquaternion& zeta, const Biquaternion& eta);

/// Pointwise current of a pair of spinor fields (finite-difference backend
/// for derivative access).
BiquatField current_field(const ChiralFieldPair& pair, double h = 1e-4);

/// Scalar part of ∂j = ∂₀j⁰ + ∇·j⃗ — the continuity quantity; vanishes on
/// solutions.
cplx current_divergence(const ChiralFieldPair& pair, const Point4& x, double h = 1e-4);

// ---------------------------------------------------------------------------
// Field strength and Maxwell.
// ---------------------------------------------------------------------------

enum class GaugeForm { general, lorentz };

struct FieldStrengthReport {
  FieldStrengthValue value;
  double lorentz_violation{0.0};  // |∂₀A⁰ + ∇·A⃗| at x
  bool lorentz_condition_ok{true};
  DerivBackend backend{DerivBackend::analytic};
};

/// Φ at x; the lorentz form uses Φ = −∂A and flags (does not throw) a
/// violated gauge condition.  Throws validation_error when A(x) is not
/// hermitean.
FieldStrengthReport field_strength(const BiquatField& a, const Point4& x,
                                   GaugeForm form = GaugeForm::general,
                                   double tol = 1e-8);

/// Φ as a field with analytic first partials assembled from A's second
/// partials (needed by ∂̃Φ).
BiquatField field_strength_field(const BiquatField& a,
                                 GaugeForm form = GaugeForm::general);

/// ∂̃Φ − j at x (j must evaluate hermitean).
Biquaternion maxwell_residual(const BiquatField& a, const BiquatField& j,
                              const Point4& x, GaugeForm form = GaugeForm::general);

/// The eight labeled real residual components of R = ∂̃Φ − j:
///   gauss    = −Re R_w        (∇·E⃗ − ρ)
///   faraday  =  Re R_vec      (∂ₜB⃗ + ∇×E⃗)
///   monopole =  Im R_w        (∇·B⃗)
///   ampere   = −Im R_vec      (∇×B⃗ − ∂ₜE⃗ − J⃗)
struct MaxwellComponents {
  double gauss{0.0};
  Vec3 faraday;
  double monopole{0.0};
  Vec3 ampere;
};
MaxwellComponents expand_to_real(const Biquaternion& residual);

/// Classical source read off a hermitean quaternionic current j = j⁰ + i j⃗
/// appearing in ∂̃Φ = j:  ρ = −j⁰, J⃗ = −j⃗.
struct ClassicalSource {
  double rho{0.0};
  Vec3 current;
};
ClassicalSource classical_source(const Biquaternion& j);

}  // namespace biquat
