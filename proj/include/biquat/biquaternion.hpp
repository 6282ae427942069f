// Complexified quaternions (biquaternions): elements of C ⊗ H.
//
// A biquaternion is  a = w + x î + y ĵ + z k̂  with complex coefficients
// w, x, y, z.  The quaternion units obey the Hamilton relations
//
//     î² = ĵ² = k̂² = −1,   î ĵ = k̂,  ĵ k̂ = î,  k̂ î = ĵ,
//
// and the complex unit i commutes with all of î, ĵ, k̂.  Three conjugations
// act on this algebra:
//
//     conj_quat(a)    = ã  : negates the vector part (anti-automorphism,
//                            (ab)~ = b̃ ã),
//     conj_complex(a) = a* : conjugates the four complex coefficients
//                            ((ab)* = a* b* for commuting coefficients),
//     conj_herm(a)    = a† = (ã)* : reverses products, (ab)† = b† a†.
//
// The complex-valued quadratic form qnorm(a) = w² + x² + y² + z² is
// multiplicative but not positive-definite (it vanishes e.g. on the
// chirality projectors (1 ± ik̂)/2); a separate positive Euclidean
// magnitude over the 8 real components is provided for convergence
// checks under the distinct name euclidean_norm.
//
// Hermitean-self-conjugate elements v = v⁰ + i v⃗ (v† = v) play the role
// of four-vectors; the scalar part of v·v* is the Minkowski square
// (v⁰)² − |v⃗|².

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace biquat {

using cplx = std::complex<double>;

/// Thrown when inverting a biquaternion whose qnorm vanishes (zero divisor).
struct zero_divisor_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown when an argument violates a documented precondition.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A real Euclidean 3-vector (components of rotation axes, momenta, E/B fields).
struct Vec3 {
  double x{0.0}, y{0.0}, z{0.0};
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 v);

/// A point of Minkowski spacetime, coordinates (t, x, y, z), metric (+,−,−,−).
struct Point4 {
  double t{0.0}, x{0.0}, y{0.0}, z{0.0};
};

/// Immutable value type: all operations return new values.
struct Biquaternion {
  cplx w{0.0}, x{0.0}, y{0.0}, z{0.0};  // coefficients of 1, î, ĵ, k̂

  constexpr Biquaternion() = default;
  constexpr Biquaternion(cplx w_, cplx x_, cplx y_, cplx z_) : w(w_), x(x_), y(y_), z(z_) {}
};

// Basis elements.
inline constexpr Biquaternion one{1.0, 0.0, 0.0, 0.0};
inline constexpr Biquaternion ihat{0.0, 1.0, 0.0, 0.0};
inline constexpr Biquaternion jhat{0.0, 0.0, 1.0, 0.0};
inline constexpr Biquaternion khat{0.0, 0.0, 0.0, 1.0};

constexpr Biquaternion operator+(const Biquaternion& a, const Biquaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Biquaternion operator-(const Biquaternion& a, const Biquaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Biquaternion operator-(const Biquaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

/// Hamilton product; the complex unit i commutes with î, ĵ, k̂.
constexpr Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
          a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}
constexpr Biquaternion operator*(cplx s, const Biquaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}
constexpr Biquaternion operator*(const Biquaternion& a, cplx s) { return s * a; }
constexpr Biquaternion operator*(double s, const Biquaternion& a) { return cplx(s) * a; }
constexpr Biquaternion operator*(const Biquaternion& a, double s) { return cplx(s) * a; }

/// Quaternionic conjugation ã: negates the vector part; (ab)~ = b̃ ã.
constexpr Biquaternion conj_quat(const Biquaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Complex conjugation a*: conjugates all four complex coefficients.
inline Biquaternion conj_complex(const Biquaternion& a) {
  return {std::conj(a.w), std::conj(a.x), std::conj(a.y), std::conj(a.z)};
}

/// Hermitean conjugation a† = (ã)*; (ab)† = b† a†.
inline Biquaternion conj_herm(const Biquaternion& a) { return conj_complex(conj_quat(a)); }

/// Complex multiplicative quadratic form w² + x² + y² + z²; NOT positive-definite.
/// Equals the scalar part of a·ã and det of the 2×2 matrix representation.
constexpr cplx qnorm(const Biquaternion& a) {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

/// Positive Euclidean magnitude over the 8 real components.  Distinct from
/// qnorm on purpose: the algebra admits no positive-definite multiplicative
/// norm; this one is only for convergence/agreement measurements.
double euclidean_norm(const Biquaternion& a);

constexpr cplx scalar_part(const Biquaternion& a) { return a.w; }
constexpr Biquaternion vector_part(const Biquaternion& a) { return {0.0, a.x, a.y, a.z}; }

/// Multiplicative inverse ã / qnorm(a).
/// Throws zero_divisor_error when |qnorm(a)| <= tol (isotropic elements such
/// as the chirality projectors have no inverse).
Biquaternion inverse(const Biquaternion& a, double tol = 1e-12);

/// Componentwise max absolute difference.
double max_abs_diff(const Biquaternion& a, const Biquaternion& b);
bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol = 1e-12);

/// Pure-vector quaternion x î + y ĵ + z k̂ from a real 3-vector.
constexpr Biquaternion pure(Vec3 v) { return {0.0, v.x, v.y, v.z}; }

/// i·(x î + y ĵ + z k̂): the spatial part of a four-vector.
inline Biquaternion ipure(Vec3 v) { return cplx(0.0, 1.0) * pure(v); }

/// Whether a† = a within tol (the four-vector / gauge-potential condition).
bool is_hermitean(const Biquaternion& a, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Four-vectors: hermitean-self-conjugate combinations v = v⁰ + i v⃗.
// Complex conjugation maps contravariant to covariant components and back.
// ---------------------------------------------------------------------------

enum class Variance { contravariant, covariant };

struct FourVector {
  Biquaternion base;
  Variance variance{Variance::contravariant};
};

/// Builds v⁰ + i v⃗ with the given variance tag.
FourVector four_vector(double v0, Vec3 v, Variance variance = Variance::contravariant);

/// Wraps an existing biquaternion; throws validation_error unless base† = base.
FourVector four_vector_from(const Biquaternion& base, Variance variance,
                            double tol = 1e-12);

/// Complex conjugation lowers/raises the index: flips the variance tag.
FourVector conj_variance(const FourVector& v);

/// Scalar part of v · v*; equals (v⁰)² − |v⃗|² for real-component four-vectors.
cplx minkowski_norm(const FourVector& v);

// ---------------------------------------------------------------------------
// Canonical split of a general biquaternion into a true four-vector part
// (real scalar + imaginary vector) and a pseudo part (imaginary scalar +
// real vector); the two parts span the whole space and recombine exactly.
// ---------------------------------------------------------------------------

struct VectorSplit {
  FourVector true_vector;      // Re w + i·Im(vector part)
  Biquaternion pseudo_vector;  // i·Im w + Re(vector part)
};

VectorSplit split_vector_parts(const Biquaternion& a);

// ---------------------------------------------------------------------------
// Euclidean products of pure-vector quaternions: u·v = −dot + cross as a
// quaternion identity.
// ---------------------------------------------------------------------------

struct VecProducts {
  cplx dot;            // Euclidean scalar product (complex coefficients allowed)
  Biquaternion cross;  // vector product, again a pure-vector quaternion
};

/// Throws validation_error when either argument has a nonzero scalar part.
VecProducts vec_products(const Biquaternion& u, const Biquaternion& v,
                         double tol = 1e-12);

// ---------------------------------------------------------------------------
// Field-strength values Φ = B⃗ + i E⃗: scalar-free biquaternions whose real
// vector part is the magnetic and imaginary vector part the electric field.
// ---------------------------------------------------------------------------

struct FieldStrengthValue {
  Biquaternion base;
};

/// Validates that the scalar part vanishes (|w| <= tol).
FieldStrengthValue field_strength_value(const Biquaternion& base, double tol = 1e-10);

/// Real vector part (magnetic field) of a field-strength value.
Vec3 b_field(const FieldStrengthValue& f);
/// Imaginary vector part (electric field) of a field-strength value.
Vec3 e_field(const FieldStrengthValue& f);

/// Diagnostic rendering "(wre+wim i) + (...)î + (...)ĵ + (...)k̂" with %.17g.
std::string to_string(const Biquaternion& a);

}  // namespace biquat
