// Weyl spinors inside the biquaternion algebra.
//
// The chirality projectors P_L = (1 + ik̂)/2 and P_R = (1 − ik̂)/2 are
// isotropic idempotents (qnorm = 0, P² = P, P_L P_R = 0, P_L + P_R = 1,
// P_R = P_L*).  Their right ideals {a P_L} and {a P_R} are two-complex-
// dimensional and carry the left- and right-handed Weyl spinors:
//
//     ψ_L =  ξ_L P_L + χ_L ĵ P_L          (spin up / spin down along k̂)
//     ψ_R = −ξ_R ĵ P_R + χ_R P_R
//
// Right multiplication by ĵ ("elevation") maps one ideal onto the other
// without touching the Lorentz transformation law.  The standard
// representation ζ = (ψ_L + ψ_R ĵ)/√2, η = (ψ_L − ψ_R ĵ)/√2 diagonalizes
// the mass term; a particle at rest has η = 0.
//
// The spin quantization axis is k̂ with ĵ as the orthogonal unit; any
// orthogonal pair (â, b̂) may be supplied instead via SpinBasis.

#pragma once

#include <optional>

#include "biquat/biquaternion.hpp"

namespace biquat {

/// Thrown when a biquaternion is not a member of the required spinor ideal.
struct ideal_membership_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Chirality { left, right };

// Chirality projectors.
inline constexpr Biquaternion proj_left{0.5, 0.0, 0.0, cplx(0.0, 0.5)};
inline constexpr Biquaternion proj_right{0.5, 0.0, 0.0, cplx(0.0, -0.5)};

/// Spin quantization frame: â is the measured axis (projector (1 + iâ)/2),
/// b̂ the orthogonal unit entering the spin-down basis element b̂(1+iâ)/2.
/// Validated: both unit, â·b̂ = 0.
struct SpinBasis {
  Vec3 a_axis{0.0, 0.0, 1.0};  // defaults to k̂
  Vec3 b_axis{0.0, 1.0, 0.0};  // defaults to ĵ
};

/// The rotor u (unit real quaternion) with u k̂ ũ = â and u ĵ ũ = b̂;
/// the generalized basis is the k̂/ĵ basis conjugated by u.
Biquaternion basis_rotor(const SpinBasis& basis);

struct SpinorComponents {
  cplx xi{0.0}, chi{0.0};
};

/// ψ_L = ξ P_L + χ ĵ P_L (generalized: u·(ξ P_L + χ ĵ P_L)·ũ-form via basis).
Biquaternion make_left(cplx xi, cplx chi, const SpinBasis& basis = {});
/// ψ_R = −ξ ĵ P_R + χ P_R.
Biquaternion make_right(cplx xi, cplx chi, const SpinBasis& basis = {});

/// Inverts the basis expansion.  Throws ideal_membership_error when the
/// reconstruction residual exceeds tol·max(1, ‖ψ‖).
SpinorComponents extract_components(const Biquaternion& psi, Chirality chirality,
                                    const SpinBasis& basis = {}, double tol = 1e-12);

/// Returns +1/2 when i k̂ ψ = +ψ, −1/2 when i k̂ ψ = −ψ, nullopt otherwise
/// (superpositions).  Throws validation_error on the zero spinor.
std::optional<double> spin_z_eigencheck(const Biquaternion& psi, double tol = 1e-12);

/// Right multiplication by ĵ: maps the right-handed ideal into the
/// left-handed one (and vice versa).  Component bookkeeping:
///   make_right(ξ,χ)·ĵ = make_left(ξ,χ)      (components unchanged)
///   make_left(ξ,χ)·ĵ  = make_right(−ξ,−χ)   (components negated)
/// so elevate∘elevate = −identity (ĵ² = −1).  Validates ideal membership.
Biquaternion elevate(const Biquaternion& psi_r, Chirality chirality = Chirality::right,
                     double tol = 1e-12);

struct ChiralSpinorPair {
  Biquaternion left, right;
};

struct StandardSpinorPair {
  Biquaternion zeta, eta;
};

/// ζ = (ψ_L + ψ_R ĵ)/√2, η = (ψ_L − ψ_R ĵ)/√2.
StandardSpinorPair to_standard(const ChiralSpinorPair& pair);
/// Exact inverse of to_standard.
ChiralSpinorPair from_standard(const StandardSpinorPair& pair);

/// Both chiralities acquire the phase e^{iφ} (left multiplication).
ChiralSpinorPair gauge_transform(const ChiralSpinorPair& pair, double phi);

// ---------------------------------------------------------------------------
// Discrete symmetries on a full Dirac spinor ψ_D (an unconstrained
// biquaternion: ψ_D = ψ_L + ψ_R) together with the spacetime-argument map.
// The returned value is the transformed field evaluated at the returned
// point, for spinors carried as constants (which is how the composition
// checks use them):
//   C: ψ → i ψ*,        x → x
//   P: ψ → −ψ î,        (t, x⃗) → (t, −x⃗)
//   T: ψ → i ψ* ĵ,      (t, x⃗) → (−t, x⃗)
//   CPT = C∘P∘T: ψ → ψ k̂,  x → −x
// ---------------------------------------------------------------------------

struct SymmetryAction {
  Biquaternion value;
  Point4 point;
};

SymmetryAction apply_C(const Biquaternion& psi, Point4 x);
SymmetryAction apply_P(const Biquaternion& psi, Point4 x);
SymmetryAction apply_T(const Biquaternion& psi, Point4 x);
SymmetryAction apply_CPT(const Biquaternion& psi, Point4 x);

}  // namespace biquat
