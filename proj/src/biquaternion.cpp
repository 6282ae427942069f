#include "biquat/biquaternion.hpp"

#include <cmath>
#include <cstdio>

namespace biquat {

double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

double euclidean_norm(const Biquaternion& a) {
  return std::sqrt(std::norm(a.w) + std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

Biquaternion inverse(const Biquaternion& a, double tol) {
  const cplx n = qnorm(a);
  if (std::abs(n) <= tol) {
    throw zero_divisor_error("inverse: qnorm = " + std::to_string(std::abs(n)) +
                             " is below tolerance; element is a zero divisor");
  }
  return (cplx(1.0) / n) * conj_quat(a);
}

double max_abs_diff(const Biquaternion& a, const Biquaternion& b) {
  const double dw = std::abs(a.w - b.w);
  const double dx = std::abs(a.x - b.x);
  const double dy = std::abs(a.y - b.y);
  const double dz = std::abs(a.z - b.z);
  return std::max(std::max(dw, dx), std::max(dy, dz));
}

bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitean(const Biquaternion& a, double tol) {
  return max_abs_diff(a, conj_herm(a)) <= tol;
}

FourVector four_vector(double v0, Vec3 v, Variance variance) {
  return {Biquaternion{v0, 0.0, 0.0, 0.0} + ipure(v), variance};
}

FourVector four_vector_from(const Biquaternion& base, Variance variance, double tol) {
  if (!is_hermitean(base, tol)) {
    throw validation_error("four_vector_from: base is not hermitean-self-conjugate");
  }
  return {base, variance};
}

FourVector conj_variance(const FourVector& v) {
  const Variance flipped = (v.variance == Variance::contravariant)
                               ? Variance::covariant
                               : Variance::contravariant;
  return {conj_complex(v.base), flipped};
}

cplx minkowski_norm(const FourVector& v) {
  return scalar_part(v.base * conj_complex(v.base));
}

VectorSplit split_vector_parts(const Biquaternion& a) {
  const Biquaternion true_part{a.w.real(), cplx(0.0, a.x.imag()), cplx(0.0, a.y.imag()),
                               cplx(0.0, a.z.imag())};
  const Biquaternion pseudo_part{cplx(0.0, a.w.imag()), a.x.real(), a.y.real(),
                                 a.z.real()};
  return {FourVector{true_part, Variance::contravariant}, pseudo_part};
}

VecProducts vec_products(const Biquaternion& u, const Biquaternion& v, double tol) {
  if (std::abs(u.w) > tol || std::abs(v.w) > tol) {
    throw validation_error("vec_products: inputs must have zero scalar part");
  }
  const cplx d = u.x * v.x + u.y * v.y + u.z * v.z;
  const Biquaternion c{0.0, u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
                       u.x * v.y - u.y * v.x};
  return {d, c};
}

FieldStrengthValue field_strength_value(const Biquaternion& base, double tol) {
  if (std::abs(base.w) > tol) {
    throw validation_error("field_strength_value: scalar part must vanish");
  }
  Biquaternion b = base;
  b.w = 0.0;
  return {b};
}

Vec3 b_field(const FieldStrengthValue& f) {
  return {f.base.x.real(), f.base.y.real(), f.base.z.real()};
}

Vec3 e_field(const FieldStrengthValue& f) {
  return {f.base.x.imag(), f.base.y.imag(), f.base.z.imag()};
}

std::string to_string(const Biquaternion& a) {
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "(%.17g%+.17gi) + (%.17g%+.17gi)î + (%.17g%+.17gi)ĵ + (%.17g%+.17gi)k̂",
                a.w.real(), a.w.imag(), a.x.real(), a.x.imag(), a.y.real(), a.y.imag(),
                a.z.real(), a.z.imag());
  return buf;
}

}  // namespace biquat
