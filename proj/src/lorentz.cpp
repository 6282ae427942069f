#include "biquat/lorentz.hpp"

#include <cmath>

namespace biquat {

namespace {

constexpr cplx kI{0.0, 1.0};

/// cos θ and sinc θ = sin θ / θ for complex θ, with an even Taylor expansion
/// (terms through θ¹⁰) below |θ| = 1e-6 to avoid the 0/0 in sinc.
struct CosSinc {
  cplx cos_v, sinc_v;
};

CosSinc cos_sinc(cplx theta) {
  if (std::abs(theta) < 1e-6) {
    const cplx t2 = theta * theta;
    cplx c{1.0}, s{1.0};
    cplx pow{1.0};
    double cden = 1.0, sden = 1.0;
    for (int k = 1; k <= 5; ++k) {
      pow *= -t2;
      cden *= (2.0 * k - 1.0) * (2.0 * k);
      sden *= (2.0 * k) * (2.0 * k + 1.0);
      c += pow / cden;
      s += pow / sden;
    }
    return {c, s};
  }
  return {std::cos(theta), std::sin(theta) / theta};
}

}  // namespace

Biquaternion generator_biquat(const LorentzGenerator& g) {
  return pure(g.kappa) + kI * pure(g.lambda);
}

Biquaternion exp_biquat(const Biquaternion& g) {
  const Biquaternion u = vector_part(g);
  // u⃗² = −(x²+y²+z²) = −θ²; cos/sinc are even, so either root serves.
  const cplx theta = std::sqrt(qnorm(u));
  const auto [cos_v, sinc_v] = cos_sinc(theta);
  const cplx scale = std::exp(scalar_part(g));
  return scale * (cos_v * one + sinc_v * u);
}

Biquaternion lorentz_rotor(const LorentzGenerator& g) {
  return exp_biquat(0.5 * generator_biquat(g));
}

FourVector transform_contravariant(const FourVector& v, const LorentzGenerator& g) {
  if (v.variance != Variance::contravariant) {
    throw validation_error("transform_contravariant: input is tagged covariant");
  }
  const Biquaternion r = lorentz_rotor(g);
  return {r * v.base * conj_herm(r), Variance::contravariant};
}

FourVector transform_covariant(const FourVector& v, const LorentzGenerator& g) {
  if (v.variance != Variance::covariant) {
    throw validation_error("transform_covariant: input is tagged contravariant");
  }
  const Biquaternion r = lorentz_rotor(g);
  return {conj_complex(r) * v.base * conj_quat(r), Variance::covariant};
}

FieldStrengthValue transform_field_strength(const FieldStrengthValue& f,
                                            const LorentzGenerator& g) {
  // Φ → R*ΦR†: the map induced by A → RAR† on the potential.  It keeps
  // ∂̃Φ = j covariant (the source transforms as RjR†) and reduces to the
  // real-rotor sandwich for pure rotations.
  const Biquaternion r = lorentz_rotor(g);
  return field_strength_value(conj_complex(r) * f.base * conj_herm(r));
}

ChiralSpinorPair lorentz_transform(const ChiralSpinorPair& pair, const LorentzGenerator& g) {
  const Biquaternion r = lorentz_rotor(g);
  return {r * pair.left, conj_complex(r) * pair.right};
}

Biquaternion rotate_vector(const Biquaternion& u, Vec3 axis, double alpha, double tol) {
  if (std::abs(u.w) > tol) {
    throw validation_error("rotate_vector: input must have zero scalar part");
  }
  if (std::abs(norm(axis) - 1.0) > tol) {
    throw validation_error("rotate_vector: rotation axis must be a unit vector");
  }
  const Biquaternion r = exp_biquat((0.5 * alpha) * pure(axis));
  return r * u * conj_quat(r);
}

}  // namespace biquat
