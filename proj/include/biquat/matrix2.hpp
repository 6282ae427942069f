// Minimal fixed-size 2×2 complex matrices and 2-component columns.
//
// This is the independent numeric substrate for the Pauli-matrix oracle:
// deliberately self-contained (no external linear-algebra dependency) so the
// oracle shares no code with the quaternion algebra it checks.

#pragma once

#include <complex>

#include "biquat/biquaternion.hpp"

namespace biquat {

/// Row-major 2×2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};
};

/// 2-component complex column (ξ, χ)ᵀ.
struct Col2 {
  cplx up{0.0}, dn{0.0};
};

constexpr Mat2 mat2_identity() { return {1.0, 0.0, 0.0, 1.0}; }

constexpr Mat2 operator+(const Mat2& m, const Mat2& n) {
  return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}
constexpr Mat2 operator-(const Mat2& m, const Mat2& n) {
  return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}
constexpr Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
constexpr Mat2 operator*(cplx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
constexpr Mat2 operator*(const Mat2& m, cplx s) { return s * m; }
constexpr Col2 operator*(const Mat2& m, const Col2& v) {
  return {m.a * v.up + m.b * v.dn, m.c * v.up + m.d * v.dn};
}
constexpr Col2 operator+(const Col2& u, const Col2& v) { return {u.up + v.up, u.dn + v.dn}; }
constexpr Col2 operator-(const Col2& u, const Col2& v) { return {u.up - v.up, u.dn - v.dn}; }
constexpr Col2 operator*(cplx s, const Col2& v) { return {s * v.up, s * v.dn}; }

constexpr cplx det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
constexpr cplx trace(const Mat2& m) { return m.a + m.d; }

/// Conjugate transpose.
inline Mat2 dagger(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

/// Entrywise complex conjugate (no transpose).
inline Mat2 conj_entries(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.b), std::conj(m.c), std::conj(m.d)};
}

/// Adjugate tr(M)·I − M; satisfies M·adj(M) = det(M)·I for 2×2.
constexpr Mat2 adjugate(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

double max_abs_diff(const Mat2& m, const Mat2& n);
double max_abs(const Col2& v);

/// Pauli matrices σ₁, σ₂, σ₃.
constexpr Mat2 sigma1() { return {0.0, 1.0, 1.0, 0.0}; }
constexpr Mat2 sigma2() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
constexpr Mat2 sigma3() { return {1.0, 0.0, 0.0, -1.0}; }

/// σ⃗ · p⃗ for a real 3-vector p.
Mat2 sigma_dot(Vec3 p);

/// Matrix exponential by scaling-and-squaring on the Taylor series
/// (adequate for the moderate norms used in oracles and tests).
Mat2 exp_mat2(const Mat2& m);

/// Eigenvalues of a 2×2 matrix (roots of λ² − tr λ + det).
struct Eigen2 {
  cplx lambda1, lambda2;
};
Eigen2 eigenvalues(const Mat2& m);

}  // namespace biquat
