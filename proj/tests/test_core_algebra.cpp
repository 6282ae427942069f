// Core algebra: multiplication against an independent component oracle,
// conjugation laws, norms, four-vectors, vector products, field-strength
// values.
#include <doctest.h>

#include <random>

#include "biquat/biquaternion.hpp"

using namespace biquat;

namespace {

std::mt19937 rng(20260819u);

cplx random_cplx() {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng)};
}

Biquaternion random_biquat() {
  return {random_cplx(), random_cplx(), random_cplx(), random_cplx()};
}

Vec3 random_vec3() {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng)};
}

// Independent multiplication oracle: the sixteen products written out from
// the unit table î² = ĵ² = k̂² = −1, îĵ = k̂ (cyclic), with complex
// coefficients commuting through.
Biquaternion mul_oracle(const Biquaternion& a, const Biquaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
          a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}

}  // namespace

TEST_CASE("unit table") {
  CHECK(max_abs_diff(ihat * ihat, -one) == 0.0);
  CHECK(max_abs_diff(jhat * jhat, -one) == 0.0);
  CHECK(max_abs_diff(khat * khat, -one) == 0.0);
  CHECK(max_abs_diff(ihat * jhat, khat) == 0.0);
  CHECK(max_abs_diff(jhat * khat, ihat) == 0.0);
  CHECK(max_abs_diff(khat * ihat, jhat) == 0.0);
  CHECK(max_abs_diff(jhat * ihat, -khat) == 0.0);
  CHECK(max_abs_diff(ihat * jhat * khat, -one) == 0.0);
}

TEST_CASE("multiplication matches the component oracle") {
  for (int i = 0; i < 200; ++i) {
    const Biquaternion a = random_biquat();
    const Biquaternion b = random_biquat();
    CHECK(max_abs_diff(a * b, mul_oracle(a, b)) < 1e-14);
  }
}

TEST_CASE("complex scalars commute with everything") {
  const cplx s = random_cplx();
  const Biquaternion a = random_biquat();
  CHECK(max_abs_diff(s * a, a * s) == 0.0);
}

TEST_CASE("conjugation laws") {
  for (int i = 0; i < 50; ++i) {
    const Biquaternion a = random_biquat();
    const Biquaternion b = random_biquat();
    // ~ and † are anti-automorphisms, * is an automorphism.
    CHECK(max_abs_diff(conj_quat(a * b), conj_quat(b) * conj_quat(a)) < 1e-14);
    CHECK(max_abs_diff(conj_complex(a * b), conj_complex(a) * conj_complex(b)) < 1e-14);
    CHECK(max_abs_diff(conj_herm(a * b), conj_herm(b) * conj_herm(a)) < 1e-14);
    // Involutions, and † = (~) ∘ (*) in either order.
    CHECK(max_abs_diff(conj_quat(conj_quat(a)), a) == 0.0);
    CHECK(max_abs_diff(conj_complex(conj_complex(a)), a) == 0.0);
    CHECK(max_abs_diff(conj_herm(conj_herm(a)), a) == 0.0);
    CHECK(max_abs_diff(conj_herm(a), conj_complex(conj_quat(a))) == 0.0);
    CHECK(max_abs_diff(conj_herm(a), conj_quat(conj_complex(a))) == 0.0);
    // îaî + ĵaĵ + k̂ak̂ = −2ã − a.
    const Biquaternion lhs =
        ihat * a * ihat + jhat * a * jhat + khat * a * khat;
    CHECK(max_abs_diff(lhs, -2.0 * conj_quat(a) - a) < 1e-14);
  }
}

TEST_CASE("qnorm is multiplicative and factors as a·ã") {
  for (int i = 0; i < 50; ++i) {
    const Biquaternion a = random_biquat();
    const Biquaternion b = random_biquat();
    CHECK(std::abs(qnorm(a * b) - qnorm(a) * qnorm(b)) < 1e-12);
    const cplx direct = a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
    CHECK(std::abs(qnorm(a) - direct) < 1e-14);
    CHECK(max_abs_diff(a * conj_quat(a), qnorm(a) * one) < 1e-14);
  }
}

TEST_CASE("euclidean norm is not the quaternionic norm") {
  // The half-projector (1 + ik̂)/2 has vanishing qnorm but length 1/√2.
  const Biquaternion p{0.5, 0.0, 0.0, cplx(0.0, 0.5)};
  CHECK(std::abs(qnorm(p)) < 1e-15);
  CHECK(euclidean_norm(p) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("inverse works away from the null cone and throws on it") {
  for (int i = 0; i < 50; ++i) {
    const Biquaternion a = random_biquat();
    if (std::abs(qnorm(a)) < 1e-6) continue;
    CHECK(max_abs_diff(a * inverse(a), one) < 1e-12);
    CHECK(max_abs_diff(inverse(a) * a, one) < 1e-12);
  }
  const Biquaternion p{0.5, 0.0, 0.0, cplx(0.0, 0.5)};
  CHECK_THROWS_AS((void)inverse(p), zero_divisor_error);
}

TEST_CASE("scalar and vector parts decompose") {
  const Biquaternion a = random_biquat();
  CHECK(max_abs_diff(scalar_part(a) * one + vector_part(a), a) == 0.0);
  CHECK(scalar_part(vector_part(a)) == cplx(0.0));
  const Vec3 v = random_vec3();
  CHECK(scalar_part(pure(v)) == cplx(0.0));
  CHECK(max_abs_diff(ipure(v), cplx(0.0, 1.0) * pure(v)) == 0.0);
}

TEST_CASE("four-vectors are hermitean and variance flips by *") {
  for (int i = 0; i < 50; ++i) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const FourVector v = four_vector(u(rng), random_vec3());
    CHECK(is_hermitean(v.base));
    CHECK(v.variance == Variance::contravariant);
    const FourVector w = conj_variance(v);
    CHECK(w.variance == Variance::covariant);
    CHECK(max_abs_diff(w.base, conj_complex(v.base)) == 0.0);
    // Minkowski norm t² − |x⃗|² from the scalar part of v·v*.
    const double t = v.base.w.real();
    const Vec3 s{v.base.x.imag(), v.base.y.imag(), v.base.z.imag()};
    CHECK(minkowski_norm(v).real() ==
          doctest::Approx(t * t - dot(s, s)).epsilon(1e-12));
    CHECK(std::abs(minkowski_norm(v).imag()) < 1e-13);
  }
  CHECK_THROWS_AS((void)four_vector_from(ihat, Variance::contravariant),
                  validation_error);
}

TEST_CASE("vector split separates true and pseudo parts") {
  const Biquaternion a = random_biquat();
  const VectorSplit s = split_vector_parts(a);
  CHECK(max_abs_diff(s.true_vector.base + s.pseudo_vector, a) < 1e-15);
  CHECK(is_hermitean(s.true_vector.base));
  // Pseudo part is anti-hermitean: p† = −p.
  CHECK(max_abs_diff(conj_herm(s.pseudo_vector), -s.pseudo_vector) < 1e-15);
}

TEST_CASE("product of pure vectors is −dot + cross") {
  for (int i = 0; i < 50; ++i) {
    const Vec3 u = random_vec3();
    const Vec3 v = random_vec3();
    const VecProducts p = vec_products(pure(u), pure(v));
    CHECK(p.dot.real() == doctest::Approx(dot(u, v)).epsilon(1e-12));
    CHECK(std::abs(p.dot.imag()) < 1e-13);
    CHECK(max_abs_diff(p.cross, pure(cross(u, v))) < 1e-13);
    CHECK(max_abs_diff(pure(u) * pure(v), -dot(u, v) * one + pure(cross(u, v))) <
          1e-13);
  }
  CHECK_THROWS_AS((void)vec_products(one, ihat), validation_error);
}

TEST_CASE("field-strength values reject scalar parts and expose E and B") {
  const Vec3 b = random_vec3();
  const Vec3 e = random_vec3();
  const FieldStrengthValue f = field_strength_value(pure(b) + ipure(e));
  CHECK(norm(b_field(f) - b) < 1e-14);
  CHECK(norm(e_field(f) - e) < 1e-14);
  CHECK_THROWS_AS((void)field_strength_value(one + ihat), validation_error);
}

TEST_CASE("rendering mentions the units") {
  const std::string s = to_string(one + 2.0 * ihat);
  CHECK(s.find("î") != std::string::npos);
}
