// Lorentz transformations as biquaternion exponentials.
//
// A generator is the scalar-free biquaternion Λ = κ⃗ + iλ⃗ with real 3-vectors
// κ⃗ (rotation angles, radians) and λ⃗ (rapidities);  conj_quat(Λ) = −Λ.
// Finite transformations act through R = exp(Λ/2):
//
//     contravariant four-vector   v → R v R†
//     covariant four-vector       v → R* v R̃
//     field strength Φ = B⃗+iE⃗    Φ → R* Φ R†
//     left-handed spinor          ψ_L → R ψ_L
//     right-handed spinor         ψ_R → R* ψ_R
//     complex scalars             φ → R φ R̃ = φ
//
// The exponential of s + u⃗ has the closed form e^s (cos θ + u⃗ sinc θ) with
// θ² = qnorm(u⃗) (so that u⃗² = −θ²); cos and sinc are even, making the
// square-root branch immaterial.  A rotation by 2π (κ = 2π â) therefore
// gives R = exp(π â) = −1: spinors change sign while vectors, transformed
// from both sides, do not.
//
// Mixed generators do not factorize: exp(κ⃗ + iλ⃗) ≠ exp(κ⃗)·exp(iλ⃗) in
// general, and no rotation∘boost decomposition is attempted here.

#pragma once

#include "biquat/biquaternion.hpp"
#include "biquat/spinor.hpp"

namespace biquat {

struct LorentzGenerator {
  Vec3 kappa;   // rotation parameters (radians)
  Vec3 lambda;  // rapidities
};

/// The scalar-free biquaternion κ⃗ + iλ⃗.
Biquaternion generator_biquat(const LorentzGenerator& g);

/// Closed-form exponential e^s(cos θ + u⃗ sinc θ), θ² = qnorm(u⃗), with a
/// Taylor fallback of cos/sinc for |θ| < 1e-6.  Defined for any biquaternion.
Biquaternion exp_biquat(const Biquaternion& g);

/// exp(Λ/2) for the generator — the rotor every transform below uses.
Biquaternion lorentz_rotor(const LorentzGenerator& g);

/// v → R v R†.  Throws validation_error if v is tagged covariant.
FourVector transform_contravariant(const FourVector& v, const LorentzGenerator& g);

/// v → R* v R̃.  Throws validation_error if v is tagged contravariant.
FourVector transform_covariant(const FourVector& v, const LorentzGenerator& g);

/// Φ → R* Φ R†; the scalar part stays zero.
FieldStrengthValue transform_field_strength(const FieldStrengthValue& f,
                                            const LorentzGenerator& g);

/// ψ_L → R ψ_L, ψ_R → R* ψ_R.
ChiralSpinorPair lorentz_transform(const ChiralSpinorPair& pair, const LorentzGenerator& g);

/// Rotation of a pure-vector quaternion u about the unit axis â by angle α:
/// u → e^{α â/2} u e^{−α â/2}.  Throws validation_error on nonzero scalar
/// part or a non-unit axis.
Biquaternion rotate_vector(const Biquaternion& u, Vec3 axis, double alpha,
                           double tol = 1e-12);

}  // namespace biquat
