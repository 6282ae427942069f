// The 2×2 matrix representation: algebra isomorphism, conjugation
// dictionary, spinor columns, and the Weyl-form Dirac oracle.
#include <doctest.h>

#include <random>

#include "biquat/dynamics.hpp"
#include "biquat/matrix_bridge.hpp"

using namespace biquat;

namespace {

std::mt19937 rng(77001u);

cplx random_cplx() {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng)};
}

Biquaternion random_biquat() {
  return {random_cplx(), random_cplx(), random_cplx(), random_cplx()};
}

}  // namespace

TEST_CASE("units map to the Pauli dictionary") {
  const cplx mi{0.0, -1.0};
  CHECK(max_abs_diff(to_matrix(one), mat2_identity()) == 0.0);
  CHECK(max_abs_diff(to_matrix(ihat), mi * sigma1()) == 0.0);
  CHECK(max_abs_diff(to_matrix(jhat), mi * sigma2()) == 0.0);
  CHECK(max_abs_diff(to_matrix(khat), mi * sigma3()) == 0.0);
}

TEST_CASE("to_matrix is an algebra isomorphism") {
  for (int i = 0; i < 200; ++i) {
    const Biquaternion a = random_biquat();
    const Biquaternion b = random_biquat();
    CHECK(max_abs_diff(to_matrix(a + b), to_matrix(a) + to_matrix(b)) < 1e-14);
    CHECK(max_abs_diff(to_matrix(a * b), to_matrix(a) * to_matrix(b)) < 1e-13);
    CHECK(max_abs_diff(from_matrix(to_matrix(a)), a) < 1e-15);
    CHECK(std::abs(det(to_matrix(a)) - qnorm(a)) < 1e-12);
    CHECK(std::abs(trace(to_matrix(a)) - 2.0 * a.w) < 1e-14);
  }
  const Mat2 m{random_cplx(), random_cplx(), random_cplx(), random_cplx()};
  CHECK(max_abs_diff(to_matrix(from_matrix(m)), m) < 1e-15);
}

TEST_CASE("conjugations translate to adjugate, σ₂-conjugation, dagger") {
  for (int i = 0; i < 50; ++i) {
    const Biquaternion a = random_biquat();
    const Mat2 m = to_matrix(a);
    CHECK(max_abs_diff(to_matrix(conj_quat(a)), adjugate(m)) < 1e-14);
    CHECK(max_abs_diff(to_matrix(conj_herm(a)), dagger(m)) < 1e-14);
    const Mat2 starred = sigma2() * conj_entries(m) * sigma2();
    CHECK(max_abs_diff(to_matrix(conj_complex(a)), starred) < 1e-14);
  }
}

TEST_CASE("spinor columns are the representation-matrix columns") {
  for (int i = 0; i < 50; ++i) {
    const cplx xi = random_cplx();
    const cplx chi = random_cplx();
    const Biquaternion l = make_left(xi, chi);
    const Biquaternion r = make_right(xi, chi);
    const Col2 cl = spinor_to_column(l, Chirality::left);
    const Col2 cr = spinor_to_column(r, Chirality::right);
    CHECK(std::abs(cl.up - xi) < 1e-14);
    CHECK(std::abs(cl.dn - chi) < 1e-14);
    CHECK(std::abs(cr.up - xi) < 1e-14);
    CHECK(std::abs(cr.dn - chi) < 1e-14);
    const Mat2 ml = to_matrix(l);
    const Mat2 mr = to_matrix(r);
    CHECK(std::abs(ml.a - cl.up) < 1e-14);  // left ideal fills column 0
    CHECK(std::abs(ml.c - cl.dn) < 1e-14);
    CHECK(std::abs(mr.b - cr.up) < 1e-14);  // right ideal fills column 1
    CHECK(std::abs(mr.d - cr.dn) < 1e-14);
  }
  CHECK_THROWS_AS((void)spinor_to_column(one, Chirality::left),
                  ideal_membership_error);
}

TEST_CASE("Weyl residual blocks equal the quaternionic residual columns") {
  // Random (off-shell) plane-wave pair in a plane-wave potential: both
  // formalisms must produce the same nonzero residuals, column by column.
  PlaneWaveSpec spec;
  spec.energy = 1.7;
  spec.momentum = {0.3, -0.4, 0.5};
  spec.mass = 1.0;
  spec.amplitudes = {make_left(random_cplx(), random_cplx()),
                     make_right(random_cplx(), random_cplx())};
  const ChiralFieldPair pair = plane_wave_fields(spec);
  const BiquatField a = em_plane_wave({0.0, 0.0, 0.8}, {1.0, 0.0, 0.0}, 0.35);
  const Point4 x{0.2, -0.1, 0.4, 0.7};

  const Col4 weyl = weyl_dirac_residual(pair, a, spec.mass, x);
  const DiracResiduals quat = dirac_residuals(pair, a, spec.mass, x);
  const Col2 upper = spinor_to_column(quat.right, Chirality::right);
  const Col2 lower = spinor_to_column(quat.left, Chirality::left);
  // Phase convention between the formalisms is exactly 1 — no fitted factor.
  CHECK(max_abs(weyl.upper - upper) < 1e-10);
  CHECK(max_abs(weyl.lower - lower) < 1e-10);
  CHECK(max_abs(upper) > 1e-3);  // genuinely off-shell
}

TEST_CASE("Weyl residual vanishes on an on-shell wave when the field is off") {
  const Vec3 p{0.2, 0.1, -0.3};
  const double m = 1.0;
  const double e = std::sqrt(m * m + dot(p, p));
  PlaneWaveSpec spec;
  spec.energy = e;
  spec.momentum = p;
  spec.mass = m;
  spec.amplitudes = solve_plane_wave_amplitudes(e, p, m, make_left(1.0, 0.5));
  const ChiralFieldPair pair = plane_wave_fields(spec);
  const Col4 res = weyl_dirac_residual(pair, em_zero(), m, Point4{0.3, 0.1, 0.2, -0.5});
  CHECK(max_abs(res.upper) < 1e-12);
  CHECK(max_abs(res.lower) < 1e-12);
}

TEST_CASE("non-hermitean potentials are rejected") {
  const ChiralFieldPair pair{field_constant(make_left(1.0, 0.0)),
                             field_constant(make_right(0.0, 1.0))};
  const BiquatField bad = field_constant(ihat);  // not a four-vector
  CHECK_THROWS_AS((void)weyl_dirac_residual(pair, bad, 1.0, Point4{}),
                  validation_error);
}
