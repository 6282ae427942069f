// Field dynamics: Dirac residuals on plane waves, the standard
// representation, gauge covariance, Pauli reduction with its constant-field
// spectrum, the large-mass limit, the conserved current, field strengths,
// and the quaternionic Maxwell equation against classical electrodynamics.
#include <doctest.h>

#include <cmath>
#include <random>

#include "biquat/dynamics.hpp"
#include "biquat/lorentz.hpp"

using namespace biquat;

namespace {

std::mt19937 rng(662607u);

cplx random_cplx() {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  return {u(rng), u(rng)};
}

Vec3 random_vec3(double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

ChiralSpinorPair random_pair() {
  return {make_left(random_cplx(), random_cplx()),
          make_right(random_cplx(), random_cplx())};
}

const Point4 kX{0.4, 0.3, -0.2, 0.6};

PlaneWaveSpec off_shell_spec() {
  PlaneWaveSpec spec;
  spec.energy = 1.9;
  spec.momentum = {0.2, -0.5, 0.4};
  spec.mass = 1.0;
  spec.amplitudes = random_pair();
  return spec;
}

PlaneWaveSpec on_shell_spec(Vec3 p, double m, const Biquaternion& left_amp) {
  PlaneWaveSpec spec;
  spec.momentum = p;
  spec.mass = m;
  spec.energy = std::sqrt(m * m + dot(p, p));
  spec.amplitudes = solve_plane_wave_amplitudes(spec.energy, p, m, left_amp);
  return spec;
}

// Classical fields of the polynomial potential used in the Maxwell tests:
// A⁰ = x² + y², A⃗ = (0, 0, t·x²).
const Polynomial kA0{{{1.0, 0, 2, 0, 0}, {1.0, 0, 0, 2, 0}}};
const Polynomial kAz{{{1.0, 1, 2, 0, 0}}};

BiquatField test_potential() {
  return em_custom_polynomial({kA0, Polynomial{}, Polynomial{}, kAz});
}

}  // namespace

TEST_CASE("quaternionic derivative of a plane wave is algebraic") {
  PlaneWaveSpec spec = off_shell_spec();
  const ChiralFieldPair pair = plane_wave_fields(spec);
  // ∂(amp·e^{−i(Et−p⃗·x⃗)}) = (−iE + i·ip⃗·(units))·value … check against the
  // exact momentum-space expression (−iE)ψ + i∇-block.
  const Biquaternion value = pair.left.value(kX);
  const Biquaternion expect =
      cplx(0.0, -spec.energy) * value +
      cplx(0.0, 1.0) * (pure(spec.momentum) * (cplx(0.0, 1.0) * value));
  CHECK(max_abs_diff(quat_derivative(pair.left, kX), expect) < 1e-12);
  const Biquaternion expect_tilde =
      cplx(0.0, -spec.energy) * value -
      cplx(0.0, 1.0) * (pure(spec.momentum) * (cplx(0.0, 1.0) * value));
  CHECK(max_abs_diff(quat_derivative_tilde(pair.left, kX), expect_tilde) < 1e-12);
}

TEST_CASE("on-shell plane waves solve the free system; off-shell ones fail") {
  const PlaneWaveSpec good = on_shell_spec({0.3, -0.2, 0.5}, 1.0, make_left(1.0, 0.4));
  CHECK(on_shell(good));
  const DiracResiduals res =
      dirac_residuals(plane_wave_fields(good), em_zero(), good.mass, kX);
  CHECK(euclidean_norm(res.left) < 1e-12);
  CHECK(euclidean_norm(res.right) < 1e-12);

  PlaneWaveSpec bad = good;
  bad.energy += 0.1;
  CHECK(!on_shell(bad, 1e-3));
  const DiracResiduals bad_res =
      dirac_residuals(plane_wave_fields(bad), em_zero(), bad.mass, kX);
  CHECK(euclidean_norm(bad_res.left) + euclidean_norm(bad_res.right) > 1e-3);
}

TEST_CASE("compact and split evaluation paths agree with a potential on") {
  const ChiralFieldPair pair = plane_wave_fields(off_shell_spec());
  const BiquatField a = em_plane_wave({0.4, 0.0, 0.3}, {0.0, 1.0, 0.0}, 0.7);
  const DiracResiduals compact =
      dirac_residuals(pair, a, 1.0, kX, DiracPath::compact);
  const DiracResiduals split = dirac_residuals(pair, a, 1.0, kX, DiracPath::split);
  CHECK(max_abs_diff(compact.left, split.left) < 1e-12);
  CHECK(max_abs_diff(compact.right, split.right) < 1e-12);
}

TEST_CASE("standard-representation residuals are the chiral ones recombined") {
  const ChiralFieldPair pair = plane_wave_fields(off_shell_spec());
  const BiquatField a = em_constant_b({0.2, -0.4, 0.7});
  const double m = 1.3;
  const DiracResiduals chiral = dirac_residuals(pair, a, m, kX);
  const StandardResiduals standard =
      standard_rep_residuals(to_standard_fields(pair), a, m, kX);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(standard.plus, s * (chiral.left + chiral.right * jhat)) < 1e-11);
  CHECK(max_abs_diff(standard.minus, s * (chiral.left - chiral.right * jhat)) < 1e-11);
}

TEST_CASE("removing the rest-energy phase moves the mass term") {
  const double m = 2.0;
  const ChiralFieldPair pair = plane_wave_fields(off_shell_spec());
  const StandardFieldPair fields = to_standard_fields(pair);
  const BiquatField a = em_constant_b({0.0, 0.3, 0.5});
  // Hattted fields ψ̂ = e^{+imt}ψ, built by finite differences.
  auto hat = [&](const BiquatField& f) {
    return BiquatField::finite_difference(
        [f, m](const Point4& p) {
          return std::exp(cplx(0.0, m * p.t)) * f.value(p);
        },
        1e-4);
  };
  const StandardFieldPair hatted{hat(fields.zeta), hat(fields.eta)};
  const StandardResiduals plain = standard_rep_residuals(fields, a, m, kX);
  const StandardResiduals moved = standard_rep_residuals(hatted, a, m, kX, true);
  const cplx phase = std::exp(cplx(0.0, m * kX.t));
  CHECK(max_abs_diff(moved.plus, phase * plain.plus) < 1e-6);
  CHECK(max_abs_diff(moved.minus, phase * plain.minus) < 1e-6);
}

TEST_CASE("local gauge transformations are a symmetry of the residuals") {
  const Polynomial phi{{{0.3, 1, 0, 0, 0}, {-0.8, 0, 1, 1, 0}, {0.5, 0, 0, 0, 2}}};
  const ChiralFieldPair pair = plane_wave_fields(off_shell_spec());
  const BiquatField a = test_potential();
  const double m = 1.1;

  const ChiralFieldPair moved{spinor_gauge_phase(pair.left, phi),
                              spinor_gauge_phase(pair.right, phi)};
  const BiquatField a_moved = em_gauge_shift(a, phi);
  const DiracResiduals before = dirac_residuals(pair, a, m, kX);
  const DiracResiduals after = dirac_residuals(moved, a_moved, m, kX);
  const cplx phase = std::exp(cplx(0.0, phi.eval(kX)));
  CHECK(max_abs_diff(after.left, phase * before.left) < 1e-10);
  CHECK(max_abs_diff(after.right, phase * before.right) < 1e-10);
}

TEST_CASE("(∇⃗+iA⃗)² equals −{∇⃗+iA⃗}² + iB⃗ termwise") {
  const BiquatField a = test_potential();
  const BiquatField psi = gaussian_packet(make_left(0.8, -0.3), 0.9, 1.7);
  const Biquaternion square = grad_plus_ia_square(psi, a, kX);
  const Vec3 b{/* ∇×A⃗ for A⃗=(0,0,t x²) */ 0.0, -2.0 * kX.t * kX.x, 0.0};
  const Biquaternion rhs =
      -scalar_square_apply(psi, a, kX) + ipure(b) * psi.value(kX);
  CHECK(max_abs_diff(square, rhs) < 1e-10);
}

TEST_CASE("constant-field spectrum matches the two-level Pauli Hamiltonian") {
  SUBCASE("axis-aligned unit field") {
    const PauliSpectrum s = pauli_constant_b_spectrum({0.0, 0.0, 1.0}, 1.0);
    CHECK(s.up == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.down == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(s.max_diff < 1e-12);
  }
  SUBCASE("tilted fields and masses") {
    for (int i = 0; i < 10; ++i) {
      const Vec3 b = random_vec3(2.0);
      if (norm(b) < 0.2) continue;
      const double m = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
      const PauliSpectrum s = pauli_constant_b_spectrum(b, m);
      CHECK(s.max_diff < 1e-10);
      CHECK(s.up == doctest::Approx(norm(b) / (2.0 * m)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS((void)pauli_constant_b_spectrum({0.0, 0.0, 0.0}, 1.0),
                  validation_error);
}

TEST_CASE("the second equation decouples at large mass at first order") {
  const BiquatField psi = gaussian_packet(make_left(1.0, 0.2), 1.2, 2.0);
  const BiquatField a = test_potential();
  const NonrelReport report =
      nonrel_limit_order(psi, a, {10.0, 100.0, 1000.0}, kX);
  CHECK(report.fitted_order == doctest::Approx(1.0).epsilon(0.1));
  for (const double diff : report.first_vs_pauli) CHECK(diff < 1e-10);
  CHECK_THROWS_AS(
      (void)nonrel_limit_order(psi, a, {100.0, 10.0, 1000.0}, kX),
      validation_error);
}

TEST_CASE("current: definition, component expansion, and standard form agree") {
  for (int i = 0; i < 100; ++i) {
    const ChiralSpinorPair pair = random_pair();
    const FourVector j = current(pair);
    CHECK(is_hermitean(j.base));
    CHECK(j.base.w.real() >= 0.0);  // j⁰ is a density
    const FourVector jc = current_components(
        extract_components(pair.left, Chirality::left),
        extract_components(pair.right, Chirality::right));
    CHECK(max_abs_diff(j.base, jc.base) < 1e-12);
    const StandardSpinorPair std_pair = to_standard(pair);
    const FourVector js = current_standard(std_pair.zeta, std_pair.eta);
    CHECK(max_abs_diff(j.base, js.base) < 1e-12);
  }
}

TEST_CASE("current is gauge invariant and Lorentz covariant") {
  for (int i = 0; i < 50; ++i) {
    const ChiralSpinorPair pair = random_pair();
    const FourVector j = current(pair);
    const FourVector j_gauge = current(gauge_transform(pair, 1.234));
    CHECK(max_abs_diff(j.base, j_gauge.base) < 1e-13);
    const LorentzGenerator g{random_vec3(0.6), random_vec3(0.6)};
    const FourVector j_moved = current(lorentz_transform(pair, g));
    const FourVector j_transported = transform_contravariant(j, g);
    CHECK(max_abs_diff(j_moved.base, j_transported.base) < 1e-10);
  }
}

TEST_CASE("the current of a superposed solution is conserved") {
  const PlaneWaveSpec one_wave = on_shell_spec({0.3, 0.0, -0.2}, 1.0, make_left(1.0, 0.3));
  const PlaneWaveSpec other = on_shell_spec({-0.1, 0.4, 0.2}, 1.0, make_left(0.5, -0.7));
  const ChiralFieldPair p1 = plane_wave_fields(one_wave);
  const ChiralFieldPair p2 = plane_wave_fields(other);
  const ChiralFieldPair sum{field_add(p1.left, p2.left),
                            field_add(p1.right, p2.right)};
  CHECK(std::abs(current_divergence(sum, kX)) < 1e-6);
}

TEST_CASE("field strength separates E and B with the classical values") {
  const BiquatField a = test_potential();
  const FieldStrengthReport phi = field_strength(a, kX);
  // E = −∇A⁰ − ∂ₜA⃗ = (−2x, −2y, −x²); B = ∇×A⃗ = (0, −2tx, 0).
  const Vec3 e_expect{-2.0 * kX.x, -2.0 * kX.y, -kX.x * kX.x};
  const Vec3 b_expect{0.0, -2.0 * kX.t * kX.x, 0.0};
  CHECK(norm(e_field(phi.value) - e_expect) < 1e-9);
  CHECK(norm(b_field(phi.value) - b_expect) < 1e-9);
  CHECK(phi.backend == DerivBackend::analytic);

  // Coulomb: E = q r̂ / r², B = 0.
  const BiquatField coul = em_coulomb(2.0);
  const FieldStrengthReport cphi = field_strength(coul, kX);
  const Vec3 r{kX.x, kX.y, kX.z};
  const double rn = norm(r);
  CHECK(norm(e_field(cphi.value) - (2.0 / (rn * rn * rn)) * r) < 1e-8);
  CHECK(norm(b_field(cphi.value)) < 1e-10);
}

TEST_CASE("pure gauges carry no field strength") {
  const Polynomial phi{{{0.7, 1, 1, 0, 0}, {-0.2, 0, 0, 2, 1}}};
  const BiquatField a = em_pure_gauge(phi);
  const FieldStrengthReport r = field_strength(a, kX);
  CHECK(norm(b_field(r.value)) < 1e-10);
  CHECK(norm(e_field(r.value)) < 1e-10);
  // Shifting any potential by a gauge leaves Φ unchanged.
  const BiquatField shifted = em_gauge_shift(test_potential(), phi);
  CHECK(max_abs_diff(field_strength(shifted, kX).value.base,
                     field_strength(test_potential(), kX).value.base) < 1e-9);
}

TEST_CASE("the Lorentz-gauge form agrees exactly in Lorentz gauge") {
  // Transverse plane wave: A⁰ = 0, ∇·A⃗ = 0.
  const Vec3 k{0.0, 0.0, 0.9};
  const Vec3 pol{1.0, 0.0, 0.0};
  const BiquatField a = em_plane_wave(k, pol, 0.6);
  const FieldStrengthReport general = field_strength(a, kX, GaugeForm::general);
  const FieldStrengthReport lorentz = field_strength(a, kX, GaugeForm::lorentz);
  CHECK(lorentz.lorentz_condition_ok);
  CHECK(max_abs_diff(general.value.base, lorentz.value.base) < 1e-10);

  // A⃗ = (x, 0, 0) has ∇·A⃗ = 1: the condition is flagged, not thrown.
  const BiquatField bad =
      em_custom_polynomial({Polynomial{}, Polynomial{{{1.0, 0, 1, 0, 0}}},
                            Polynomial{}, Polynomial{}});
  const FieldStrengthReport flagged =
      field_strength(bad, kX, GaugeForm::lorentz);
  CHECK(!flagged.lorentz_condition_ok);
  CHECK(flagged.lorentz_violation == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("vacuum Maxwell residual vanishes for a light-like wave") {
  const BiquatField a = em_plane_wave({0.0, 0.7, 0.0}, {0.0, 0.0, 1.0}, 0.5);
  const Biquaternion residual = maxwell_residual(a, em_zero(), kX);
  CHECK(euclidean_norm(residual) < 1e-8);
  const MaxwellComponents parts = expand_to_real(residual);
  CHECK(std::abs(parts.gauss) < 1e-8);
  CHECK(std::abs(parts.monopole) < 1e-8);
  CHECK(norm(parts.faraday) < 1e-8);
  CHECK(norm(parts.ampere) < 1e-8);
}

TEST_CASE("a constructed source satisfies Maxwell and reads back classically") {
  const BiquatField a = test_potential();
  // j := ∂̃Φ as a field; then ∂̃Φ − j ≡ 0 and the classical pieces follow
  // Gauss and Ampère with ρ = ∇·E and J⃗ = ∇×B − ∂ₜE.
  const BiquatField j = BiquatField::finite_difference(
      [a](const Point4& p) {
        return quat_derivative_tilde(field_strength_field(a), p);
      },
      1e-4);
  CHECK(euclidean_norm(maxwell_residual(a, j, kX)) < 1e-7);

  const ClassicalSource src = classical_source(j.value(kX));
  // ρ = ∇·E = −4;  J⃗ = ∇×B − ∂ₜE = (0, 0, −2t) with E time-independent.
  CHECK(src.rho == doctest::Approx(-4.0).epsilon(1e-7));
  const Vec3 j_expect{0.0, 0.0, -2.0 * kX.t};
  CHECK(norm(src.current - j_expect) < 1e-7);
}

TEST_CASE("the symmetric gauge reproduces a constant magnetic field exactly") {
  const Vec3 b{0.4, -0.9, 0.3};
  const BiquatField a = em_constant_b(b);
  const FieldStrengthReport phi = field_strength(a, kX);
  CHECK(norm(b_field(phi.value) - b) < 1e-14);
  CHECK(norm(e_field(phi.value)) < 1e-14);
  CHECK(euclidean_norm(maxwell_residual(a, em_zero(), kX)) < 1e-10);
}
