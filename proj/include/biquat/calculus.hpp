// Quaternionic differentiation.
//
// Two variable models are supported.
//
//   Unconstrained:  q = w + x î + y ĵ + z k̂ with four independent COMPLEX
//   coefficients.  The four derivative operators act componentwise in the
//   Wirtinger sense (∂_w = (∂_{Re w} − i ∂_{Im w})/2, ∂_w* its conjugate)
//   and are assembled with quaternion units multiplying from the left:
//
//       ∂  = ∂_w  + î ∂_x  + ĵ ∂_y  + k̂ ∂_z          (d)
//       ∂̃  = ∂_w  − î ∂_x  − ĵ ∂_y  − k̂ ∂_z          (d_tilde)
//       ∂* = ∂_w* + î ∂_x* + ĵ ∂_y* + k̂ ∂_z*         (d_star)
//       ∂† = ∂_w* − î ∂_x* − ĵ ∂_y* − k̂ ∂_z*         (d_dagger)
//
//   Any expression built from q alone (no conjugates) is holomorphic in
//   every component, so d_star and d_dagger annihilate it.  Key identities:
//
//       ∂q = −2    ∂q̃ = 4     ∂(aq) = −2ã    ∂(aq̃) = 4a₀
//       ∂̃q = 4     ∂̃q̃ = −2    ∂̃(aq) = 4a₀    ∂̃(aq̃) = −2ã
//
//   Vector-constrained:  q = t + i(x î + y ĵ + z k̂) is a four-vector with
//   four REAL degrees of freedom (t, x, y, z); the assembled operators use
//   units (1, iî, iĵ, ik̂) and their conjugates.  The right-hand sides of
//   the table above interchange vertically:
//
//       ∂q = 4     ∂q̃ = −2    ∂(aq) = 4a₀    ∂(aq̃) = −2ã
//       ∂̃q = −2    ∂̃q̃ = 4     ∂̃(aq) = −2ã    ∂̃(aq̃) = 4a₀
//
// Monomials α q β q γ … (constants alternating with q / q̃ slots) are
// differentiated term by term: in the unconstrained model each q slot
// contributes −2·L̃·R and each q̃ slot 2·L·R + 2·L̃·R, where L (R) is the
// word to the left (right) of the slot and L̃ mirrors it — factors
// reversed, constants quaternion-conjugated, q ↔ q̃ swapped.  The same
// rules apply from the right with R mirrored instead.  All rules are
// cross-checkable against central finite differences.
//
// For a REAL-valued function of a real quaternion (real coefficients on
// (1, î, ĵ, k̂)) the assembled gradient  ∂f = f_t + î f_x + ĵ f_y + k̂ f_z
// vanishes exactly at extrema; extremum_residual evaluates it by finite
// differences.  Example: f(q) = ‖q − c‖² has ∂f = 2(q − c).

#pragma once

#include <functional>
#include <vector>

#include "biquat/biquaternion.hpp"

namespace biquat {

enum class DerivKind { d, d_tilde, d_star, d_dagger };
enum class VariableModel { unconstrained, vector_real };
enum class ActionSide { left, right };
enum class SlotKind { q, q_tilde };

/// The eight unconstrained table entries: ∂q, ∂q̃, ∂̃q, ∂̃q̃ and, with a
/// constant left factor, ∂(aq), ∂(aq̃), ∂̃(aq), ∂̃(aq̃).
/// Only kinds d and d_tilde have table rows; others throw validation_error.
Biquaternion identity_table(DerivKind kind, SlotKind slot);
Biquaternion identity_table(DerivKind kind, SlotKind slot, const Biquaternion& a);

/// The eight vector-constrained entries (rows interchanged vertically).
Biquaternion vector_identity_table(DerivKind kind, SlotKind slot);
Biquaternion vector_identity_table(DerivKind kind, SlotKind slot, const Biquaternion& a);

// ---------------------------------------------------------------------------
// Monomials in one quaternionic variable.
// ---------------------------------------------------------------------------

struct MonomialFactor {
  bool is_slot{false};
  SlotKind slot{SlotKind::q};   // meaningful when is_slot
  Biquaternion constant{one};   // meaningful when !is_slot
};

/// Ordered word  α q β q̃ γ …  — constants strictly alternating with slots,
/// first and last factor constant (possibly 1).  Use the fluent builder:
///   monomial(alpha).times_q().times(beta).times_q_tilde().times(gamma)
struct QuaternionMonomial {
  std::vector<MonomialFactor> factors;

  QuaternionMonomial& times(const Biquaternion& c);
  QuaternionMonomial& times_q();
  QuaternionMonomial& times_q_tilde();
};

/// Starts a monomial from a leading constant (default 1).
QuaternionMonomial monomial(const Biquaternion& lead = one);

/// Throws validation_error unless factors alternate constant/slot and begin
/// and end with a constant.
void validate(const QuaternionMonomial& mono);

Biquaternion evaluate(const QuaternionMonomial& mono, const Biquaternion& q);

using MonomialSum = std::vector<QuaternionMonomial>;
Biquaternion evaluate(const MonomialSum& sum, const Biquaternion& q);

/// Exact symbolic derivative as a sum of monomials (Leibniz over slots, each
/// slot resolved by the identity tables with mirrored left/right words).
/// Starred kinds give the empty sum in the unconstrained model and alias
/// d_tilde / d in the vector model.
MonomialSum differentiate_monomial(const QuaternionMonomial& mono, DerivKind kind,
                                   VariableModel model = VariableModel::unconstrained,
                                   ActionSide side = ActionSide::left);

// ---------------------------------------------------------------------------
// Finite differences.
// ---------------------------------------------------------------------------

/// Central-difference evaluation of the assembled operators above at q0,
/// error O(h²).  Unconstrained: Wirtinger steps over 8 real components.
/// Vector model: steps over (t,x,y,z); q0 must be hermitean-self-conjugate.
/// Throws field_evaluation NaNs as validation_error.
Biquaternion fd_derivative(const std::function<Biquaternion(const Biquaternion&)>& f,
                           const Biquaternion& q0, DerivKind kind, VariableModel model,
                           double h = 1e-4, ActionSide side = ActionSide::left);

/// Gradient ∂f = f_t + î f_x + ĵ f_y + k̂ f_z of a real-valued function over
/// the four REAL coefficients of q0 (which must itself have real
/// coefficients).  Validates |Im f(q0)| < 1e-10; zero result (≤ caller's
/// tolerance) certifies a stationary point.
Biquaternion extremum_residual(const std::function<cplx(const Biquaternion&)>& f,
                               const Biquaternion& q0, double h = 1e-4);

}  // namespace biquat
