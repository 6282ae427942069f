#include "biquat/matrix_bridge.hpp"

namespace biquat {

namespace {
constexpr cplx kI{0.0, 1.0};
}

Mat2 to_matrix(const Biquaternion& q) {
  return {q.w - kI * q.z, -kI * q.x - q.y, -kI * q.x + q.y, q.w + kI * q.z};
}

Biquaternion from_matrix(const Mat2& m) {
  return {0.5 * (m.a + m.d), 0.5 * kI * (m.b + m.c), 0.5 * (m.c - m.b),
          0.5 * kI * (m.a - m.d)};
}

Col2 spinor_to_column(const Biquaternion& psi, Chirality chirality, double tol) {
  const SpinorComponents c = extract_components(psi, chirality, {}, tol);
  return {c.xi, c.chi};
}

Col4 weyl_dirac_residual(const ChiralFieldPair& pair, const BiquatField& a, double mass,
                         const Point4& x) {
  // Spinor columns and their coordinate derivatives (column extraction is
  // linear, so the column of ∂ψ is ∂ of the column).
  const Col2 col_l = spinor_to_column(pair.left.value(x), Chirality::left);
  const Col2 col_r = spinor_to_column(pair.right.value(x), Chirality::right);
  Col2 dcol_l[4], dcol_r[4];
  for (int mu = 0; mu < 4; ++mu) {
    dcol_l[mu] = spinor_to_column(pair.left.partial(mu, x), Chirality::left);
    dcol_r[mu] = spinor_to_column(pair.right.partial(mu, x), Chirality::right);
  }

  // Covariant potential components A_mu = (A⁰, −A⃗) from A = A⁰ + iA⃗.
  const Biquaternion av = a.value(x);
  if (!is_hermitean(av, 1e-10)) {
    throw validation_error("weyl_dirac_residual: potential is not a four-vector field");
  }
  const double a_cov[4] = {av.w.real(), -av.x.imag(), -av.y.imag(), -av.z.imag()};

  const Mat2 sigma[3] = {sigma1(), sigma2(), sigma3()};
  auto dirac_block = [&](const Col2 col[5], double sign) {
    // i [D_0 ± σ⃗·D⃗] col − m (other column), with D_mu col = ∂_mu col − iA_mu col;
    // sign = +1 gives σ^μ, −1 gives σ̄^μ.
    Col2 d0 = col[1] - kI * a_cov[0] * col[0];
    Col2 acc = d0;
    for (int k = 0; k < 3; ++k) {
      const Col2 dk = col[2 + k] - kI * a_cov[1 + k] * col[0];
      acc = acc + cplx(sign) * (sigma[k] * dk);
    }
    return kI * acc;
  };

  const Col2 pack_l[5] = {col_l, dcol_l[0], dcol_l[1], dcol_l[2], dcol_l[3]};
  const Col2 pack_r[5] = {col_r, dcol_r[0], dcol_r[1], dcol_r[2], dcol_r[3]};

  const Col2 upper = dirac_block(pack_r, -1.0) - cplx(mass) * col_l;
  const Col2 lower = dirac_block(pack_l, +1.0) - cplx(mass) * col_r;
  return {upper, lower};
}

}  // namespace biquat
