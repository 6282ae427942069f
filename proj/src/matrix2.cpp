#include "biquat/matrix2.hpp"

#include <cmath>

namespace biquat {

double max_abs_diff(const Mat2& m, const Mat2& n) {
  const double da = std::abs(m.a - n.a);
  const double db = std::abs(m.b - n.b);
  const double dc = std::abs(m.c - n.c);
  const double dd = std::abs(m.d - n.d);
  return std::max(std::max(da, db), std::max(dc, dd));
}

double max_abs(const Col2& v) { return std::max(std::abs(v.up), std::abs(v.dn)); }

Mat2 sigma_dot(Vec3 p) {
  return cplx(p.x) * sigma1() + cplx(p.y) * sigma2() + cplx(p.z) * sigma3();
}

Mat2 exp_mat2(const Mat2& m) {
  // Scale so the scaled matrix has entries of magnitude <~ 0.5, run the
  // Taylor series to machine precision, then square back.
  const double mag =
      std::max(std::max(std::abs(m.a), std::abs(m.b)), std::max(std::abs(m.c), std::abs(m.d)));
  int squarings = 0;
  double scale = 1.0;
  while (mag * scale > 0.5 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat2 s = cplx(scale) * m;
  Mat2 sum = mat2_identity();
  Mat2 term = mat2_identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * s * cplx(1.0 / k);
    sum = sum + term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

Eigen2 eigenvalues(const Mat2& m) {
  const cplx half_tr = 0.5 * trace(m);
  const cplx disc = std::sqrt(half_tr * half_tr - det(m));
  return {half_tr + disc, half_tr - disc};
}

}  // namespace biquat
