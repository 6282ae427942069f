#include "biquat/spinor.hpp"

#include <cmath>

namespace biquat {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool is_default_basis(const SpinBasis& basis) {
  return basis.a_axis.x == 0.0 && basis.a_axis.y == 0.0 && basis.a_axis.z == 1.0 &&
         basis.b_axis.x == 0.0 && basis.b_axis.y == 1.0 && basis.b_axis.z == 0.0;
}

void validate_basis(const SpinBasis& basis) {
  const double tol = 1e-12;
  if (std::abs(norm(basis.a_axis) - 1.0) > tol || std::abs(norm(basis.b_axis) - 1.0) > tol) {
    throw validation_error("SpinBasis: axes must be unit 3-vectors");
  }
  if (std::abs(dot(basis.a_axis, basis.b_axis)) > tol) {
    throw validation_error("SpinBasis: axes must be orthogonal (a.b = 0)");
  }
}

/// Unit real quaternion from a proper rotation matrix given by columns
/// (images of î, ĵ, k̂); Shepperd's method, numerically stable branch choice.
Biquaternion rotor_from_columns(Vec3 c1, Vec3 c2, Vec3 c3) {
  const double m[3][3] = {{c1.x, c2.x, c3.x}, {c1.y, c2.y, c3.y}, {c1.z, c2.z, c3.z}};
  double w, x, y, z;
  const double tr = m[0][0] + m[1][1] + m[2][2];
  if (tr > 0.0) {
    const double s = std::sqrt(tr + 1.0) * 2.0;
    w = 0.25 * s;
    x = (m[2][1] - m[1][2]) / s;
    y = (m[0][2] - m[2][0]) / s;
    z = (m[1][0] - m[0][1]) / s;
  } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
    const double s = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]) * 2.0;
    w = (m[2][1] - m[1][2]) / s;
    x = 0.25 * s;
    y = (m[0][1] + m[1][0]) / s;
    z = (m[0][2] + m[2][0]) / s;
  } else if (m[1][1] > m[2][2]) {
    const double s = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]) * 2.0;
    w = (m[0][2] - m[2][0]) / s;
    x = (m[0][1] + m[1][0]) / s;
    y = 0.25 * s;
    z = (m[1][2] + m[2][1]) / s;
  } else {
    const double s = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]) * 2.0;
    w = (m[1][0] - m[0][1]) / s;
    x = (m[0][2] + m[2][0]) / s;
    y = (m[1][2] + m[2][1]) / s;
    z = 0.25 * s;
  }
  return {w, x, y, z};
}

}  // namespace

Biquaternion basis_rotor(const SpinBasis& basis) {
  validate_basis(basis);
  // î ↦ b̂×â, ĵ ↦ b̂, k̂ ↦ â gives a proper orthonormal frame.
  return rotor_from_columns(cross(basis.b_axis, basis.a_axis), basis.b_axis, basis.a_axis);
}

Biquaternion make_left(cplx xi, cplx chi, const SpinBasis& basis) {
  const Biquaternion std_form = xi * proj_left + chi * (jhat * proj_left);
  if (is_default_basis(basis)) return std_form;
  const Biquaternion u = basis_rotor(basis);
  return u * std_form * conj_quat(u);
}

Biquaternion make_right(cplx xi, cplx chi, const SpinBasis& basis) {
  const Biquaternion std_form = -xi * (jhat * proj_right) + chi * proj_right;
  if (is_default_basis(basis)) return std_form;
  const Biquaternion u = basis_rotor(basis);
  return u * std_form * conj_quat(u);
}

SpinorComponents extract_components(const Biquaternion& psi, Chirality chirality,
                                    const SpinBasis& basis, double tol) {
  Biquaternion p = psi;
  if (!is_default_basis(basis)) {
    const Biquaternion u = basis_rotor(basis);
    p = conj_quat(u) * p * u;
  }
  SpinorComponents comps;
  if (chirality == Chirality::left) {
    comps = {p.w - kI * p.z, p.y - kI * p.x};
  } else {
    comps = {-p.y - kI * p.x, p.w + kI * p.z};
  }
  const Biquaternion rebuilt = (chirality == Chirality::left)
                                   ? make_left(comps.xi, comps.chi, basis)
                                   : make_right(comps.xi, comps.chi, basis);
  const double scale = std::max(1.0, euclidean_norm(psi));
  if (max_abs_diff(rebuilt, psi) > tol * scale) {
    throw ideal_membership_error(
        "extract_components: quaternion is not a member of the requested ideal");
  }
  return comps;
}

std::optional<double> spin_z_eigencheck(const Biquaternion& psi, double tol) {
  const double scale = euclidean_norm(psi);
  if (scale == 0.0) {
    throw validation_error("spin_z_eigencheck: zero spinor has no spin direction");
  }
  const Biquaternion acted = (kI * khat) * psi;
  if (euclidean_norm(acted - psi) <= tol * scale) return +0.5;
  if (euclidean_norm(acted + psi) <= tol * scale) return -0.5;
  return std::nullopt;
}

Biquaternion elevate(const Biquaternion& psi_r, Chirality chirality, double tol) {
  (void)extract_components(psi_r, chirality, {}, tol);  // membership validation
  return psi_r * jhat;
}

StandardSpinorPair to_standard(const ChiralSpinorPair& pair) {
  const Biquaternion elevated = pair.right * jhat;
  return {kInvSqrt2 * (pair.left + elevated), kInvSqrt2 * (pair.left - elevated)};
}

ChiralSpinorPair from_standard(const StandardSpinorPair& pair) {
  const Biquaternion left = kInvSqrt2 * (pair.zeta + pair.eta);
  const Biquaternion elevated = kInvSqrt2 * (pair.zeta - pair.eta);
  return {left, -(elevated * jhat)};  // undo the elevation: (ψ_R ĵ)ĵ = −ψ_R
}

ChiralSpinorPair gauge_transform(const ChiralSpinorPair& pair, double phi) {
  const cplx phase = std::exp(kI * phi);
  return {phase * pair.left, phase * pair.right};
}

SymmetryAction apply_C(const Biquaternion& psi, Point4 x) {
  return {kI * conj_complex(psi), x};
}

SymmetryAction apply_P(const Biquaternion& psi, Point4 x) {
  return {-(psi * ihat), Point4{x.t, -x.x, -x.y, -x.z}};
}

SymmetryAction apply_T(const Biquaternion& psi, Point4 x) {
  return {kI * conj_complex(psi) * jhat, Point4{-x.t, x.x, x.y, x.z}};
}

SymmetryAction apply_CPT(const Biquaternion& psi, Point4 x) {
  return {psi * khat, Point4{-x.t, -x.x, -x.y, -x.z}};
}

}  // namespace biquat
