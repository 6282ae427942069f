// Exterior (Grassmann) algebra with biquaternion coefficients.
//
// Elements are finite sums  Σ C_T · g_{i1} g_{i2} … g_{ik}  over strictly
// increasing generator tuples T = (i1 < … < ik), with biquaternion
// coefficients C_T.  Generators anticommute pairwise, square to zero, and
// commute with the quaternion units; multiplication picks up the parity of
// the merge permutation and multiplies coefficients in order.
//
// Three conjugations extend the biquaternion ones to fermionic elements:
//
//   conj_complex_ferm:  on a product of two degree-1 factors, (ξχ)* = −ξ*χ*;
//                       realized in general by starring each generator,
//                       reversing their order, and re-canonicalizing
//                       (coefficients → conj_complex).
//   conj_quat_ferm:     (ξχ)~ = −χ̃ξ̃, which on canonical terms leaves the
//                       generator word untouched (the two sign sources
//                       cancel) and quaternion-conjugates the coefficient.
//   conj_herm_ferm:     (ξχ)† = χ†ξ† with NO sign; implemented as the
//                       composition conj_quat_ferm ∘ conj_complex_ferm.
//
// The fixed algebra instance dirac_field_algebra() carries twelve
// generators: the four spinor components ξ_L, χ_L, ξ_R, χ_R, their four
// complex conjugates, and four opaque kinetic symbols K_L, K_R, K_L*, K_R*
// standing for the values of the long derivatives Dψ_L, D̃ψ_R at a point.
// The chiral spinors embed as
//
//   ψ_L = ξ_L·P_L + χ_L·ĵP_L,     ψ_R = −ξ_R·ĵP_R + χ_R·P_R,
//
// and the spinor derivatives act through the ideal projectors:
//
//   ∂_{ψ_L†} X = (∂_{ξ_L*} + ĵ ∂_{χ_L*}) (P_L X)          (from the left)
//   ∂_{ψ_R†} X = (∂_{ξ_R*} + ĵ ∂_{χ_R*}) ((−ĵ) P_R X)     (from the left)
//   X ∂_{ψ_L}  = (X P_L) ∂_{ξ_L} − (X P_L ĵ) ∂_{χ_L}      (from the right)
//   X ∂_{ψ_R}  = (X P_R ĵ) ∂_{ξ_R} + (X P_R) ∂_{χ_R}      (from the right)
//
// so that ∂_{ψ_L†} ψ_L† = 1 and, because P_L annihilates the right ideal,
// ∂_{ψ_L†} ψ_L* = −P_R.  Varying the eight-term massive Dirac Lagrangian
//
//   L = ψ_L†(iK_L) + ψ_R†(iK_R) − m ψ_L†ψ_R ĵ + q.c. + c.c.
//
// with respect to ψ_L† and ψ_R† reproduces the equations of motion
// iDψ_L − mψ_Rĵ = 0 and iD̃ψ_R + mψ_Lĵ = 0 symbolically.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "biquat/biquaternion.hpp"
#include "biquat/calculus.hpp"  // ActionSide

namespace biquat {

/// Generator universe for one exterior algebra; the `star` involution pairs
/// each generator with its complex conjugate.
struct ExteriorAlgebra {
  std::vector<std::string> names;
  std::vector<int> star;

  int size() const { return static_cast<int>(names.size()); }
};

/// Validates sizes and that star is an involution.
ExteriorAlgebra make_algebra(std::vector<std::string> names, std::vector<int> star);

/// The 12-generator instance used by the Dirac variation.
const ExteriorAlgebra& dirac_field_algebra();

// Indices into dirac_field_algebra().
enum : int {
  gen_xiL = 0,
  gen_chiL = 1,
  gen_xiR = 2,
  gen_chiR = 3,
  gen_xiLs = 4,
  gen_chiLs = 5,
  gen_xiRs = 6,
  gen_chiRs = 7,
  gen_kinL = 8,
  gen_kinR = 9,
  gen_kinLs = 10,
  gen_kinRs = 11,
};

/// Canonical term order: by degree, then lexicographic tuple.
struct TupleLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Immutable-by-convention sparse element; terms hold strictly increasing
/// tuples with nonzero coefficients (exact zeros pruned on construction).
struct ExteriorElement {
  const ExteriorAlgebra* algebra{nullptr};
  std::map<std::vector<int>, Biquaternion, TupleLess> terms;
};

/// Degree-0 embedding of a biquaternion.
ExteriorElement ext_scalar(const Biquaternion& c,
                           const ExteriorAlgebra& alg = dirac_field_algebra());

/// Single generator times a coefficient.
ExteriorElement ext_generator(int index, const Biquaternion& coeff = one,
                              const ExteriorAlgebra& alg = dirac_field_algebra());

ExteriorElement operator+(const ExteriorElement& u, const ExteriorElement& v);
ExteriorElement operator-(const ExteriorElement& u, const ExteriorElement& v);
ExteriorElement operator-(const ExteriorElement& u);

/// Sign-correct associative product; throws validation_error on mixed
/// algebra instances.  Also available as operator*.
ExteriorElement ext_mul(const ExteriorElement& u, const ExteriorElement& v);
ExteriorElement operator*(const ExteriorElement& u, const ExteriorElement& v);

/// Coefficient-wise quaternion multiplication from the left / right
/// (generators commute with quaternion units).
ExteriorElement scale_left(const Biquaternion& c, const ExteriorElement& u);
ExteriorElement scale_right(const ExteriorElement& u, const Biquaternion& c);

ExteriorElement conj_complex_ferm(const ExteriorElement& u);
ExteriorElement conj_quat_ferm(const ExteriorElement& u);
ExteriorElement conj_herm_ferm(const ExteriorElement& u);

/// True when every term has the same generator degree (zero counts as
/// homogeneous of degree 0).
bool is_homogeneous(const ExteriorElement& u);
/// Common degree of a homogeneous element; throws validation_error otherwise.
int degree(const ExteriorElement& u);

/// Componentwise max |coefficient difference| over the union of tuples.
double max_abs_diff(const ExteriorElement& u, const ExteriorElement& v);
bool approx_equal(const ExteriorElement& u, const ExteriorElement& v,
                  double tol = 1e-12);

/// Keeps only the quaternion-scalar (w) part of every coefficient.
ExteriorElement scalar_coefficients(const ExteriorElement& u);

/// Deterministic canonical rendering, one term per line:
///   "xiR : w=(-0.5,0) x=(0,0) y=(0,0) z=(0,-0.5)"
/// Numbers print with %.15g (negative zero normalized); the zero element
/// prints as "0".
std::string to_string(const ExteriorElement& u);

// ---------------------------------------------------------------------------
// Fermionic spinor symbols and derivatives.
// ---------------------------------------------------------------------------

/// ψ_L = ξ_L·P_L + χ_L·ĵP_L as a degree-1 element.
ExteriorElement psi_left_symbol();
/// ψ_R = −ξ_R·ĵP_R + χ_R·P_R as a degree-1 element.
ExteriorElement psi_right_symbol();
/// Opaque kinetic values K_L ~ Dψ_L and K_R ~ D̃ψ_R.
ExteriorElement kinetic_left_symbol();
ExteriorElement kinetic_right_symbol();

/// Left (or right) Grassmann derivative with respect to one generator:
/// anticommute it to the chosen end of each word and erase it.
ExteriorElement generator_derivative(const ExteriorElement& expr, int generator,
                                     ActionSide side);

enum class SpinorSlot { psi_left_dag, psi_right_dag, psi_left, psi_right };

/// Assembled spinor derivatives (header comment above).  Daggered slots act
/// from the left only, undaggered from the right only; passing the wrong
/// side throws validation_error, as does an element from a foreign algebra.
ExteriorElement spinor_derivative(const ExteriorElement& expr, SpinorSlot which,
                                  ActionSide side);

/// The varied massive Dirac Lagrangian and its two equations of motion.
struct DiracVariation {
  ExteriorElement lagrangian;  // eight terms
  ExteriorElement left_eq;     // ∂_{ψ_L†} L = i·K_L − m(ξ_R·P_L + χ_R·ĵP_L)
  ExteriorElement right_eq;    // ∂_{ψ_R†} L = i·K_R + m(ξ_L·ĵP_R − χ_L·P_R)
};
DiracVariation vary_dirac_lagrangian(double mass);

/// Graded cyclicity of the quaternion-scalar part:
/// scalar(abc) = (−1)^{|a|·|bc|} scalar(bca), compared coefficientwise on
/// matching generator tuples.  Entries must be degree-homogeneous.
struct CyclicReport {
  ExteriorElement lhs_scalar;
  ExteriorElement rhs_scalar;  // already multiplied by the grading sign
  double sign{1.0};
  double max_diff{0.0};
  bool passed{false};
};
CyclicReport cyclic_real_part(const ExteriorElement& a, const ExteriorElement& b,
                              const ExteriorElement& c, double tol = 1e-12);

}  // namespace biquat
