// The faithful 2×2 complex-matrix representation of the biquaternion algebra
// and the standard Weyl-representation Dirac operator built on it: the
// independent oracle every algebraic claim is checked against.
//
// Correspondence (chosen so that i î → σ₁, i ĵ → σ₂, i k̂ → σ₃):
//
//     1 → I,    î → −iσ₁,    ĵ → −iσ₂,    k̂ → −iσ₃
//
//     rep(a) = [[ w − iz,  −ix − y ],
//               [ −ix + y,  w + iz ]]        for a = w + xî + yĵ + zk̂.
//
// The map is an algebra isomorphism onto all 2×2 complex matrices:
//   rep(ab) = rep(a)rep(b), det∘rep = qnorm,
//   conj_herm ↔ conjugate transpose, conj_quat ↔ adjugate (tr·I − M),
//   conj_complex ↔ (adjugate)†.
// The chirality projectors map to diag(1,0) / diag(0,1), so the left/right
// ideal components (ξ, χ) are exactly the first/second matrix column, and
// left multiplication acts on both columns by rep of the multiplier.
//
// The Dirac oracle uses the chiral basis with the block order
//
//     γ⁰ = [[0, I], [I, 0]],   γ^k = [[0, −σ^k], [σ^k, 0]],
//     Ψ = (column_L ; column_R),  metric (+,−,−,−),  D_μ = ∂_μ − iA_μ,
//
// in which (iγ^μD_μ − m)Ψ has upper block  i σ̄^μD_μ col_R − m col_L  and
// lower block  i σ^μD_μ col_L − m col_R  (σ^μ = (1, σ⃗), σ̄^μ = (1, −σ⃗)).
// With this choice both blocks equal the column images of the quaternionic
// residuals with overall phase exactly 1 (upper ↔ right-handed equation,
// lower ↔ left-handed equation).

#pragma once

#include "biquat/fields.hpp"
#include "biquat/matrix2.hpp"
#include "biquat/spinor.hpp"

namespace biquat {

/// Faithful representation; see the table above.
Mat2 to_matrix(const Biquaternion& a);

/// Exact inverse (the representation is onto).
Biquaternion from_matrix(const Mat2& m);

/// Column image (ξ, χ)ᵀ of an ideal member; first matrix column for the
/// left ideal, second for the right.  Throws ideal_membership_error.
Col2 spinor_to_column(const Biquaternion& psi, Chirality chirality, double tol = 1e-12);

/// 4-component residual of (iγ^μD_μ − m)Ψ at x in the convention above:
/// upper = right-handed block, lower = left-handed block.
struct Col4 {
  Col2 upper, lower;
};

Col4 weyl_dirac_residual(const ChiralFieldPair& pair, const BiquatField& a, double mass,
                         const Point4& x);

}  // namespace biquat
