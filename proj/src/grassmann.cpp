#include "biquat/grassmann.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "biquat/spinor.hpp"

namespace biquat {

namespace {

constexpr cplx kI{0.0, 1.0};

bool coeff_zero(const Biquaternion& c) {
  return c.w == cplx(0.0) && c.x == cplx(0.0) && c.y == cplx(0.0) && c.z == cplx(0.0);
}

void add_term(ExteriorElement& out, std::vector<int> tuple, const Biquaternion& coeff) {
  if (coeff_zero(coeff)) return;
  auto it = out.terms.find(tuple);
  if (it == out.terms.end()) {
    out.terms.emplace(std::move(tuple), coeff);
  } else {
    it->second = it->second + coeff;
    if (coeff_zero(it->second)) out.terms.erase(it);
  }
}

const ExteriorAlgebra* common_algebra(const ExteriorElement& u, const ExteriorElement& v,
                                      const char* who) {
  if (u.algebra != v.algebra) {
    throw validation_error(std::string(who) + ": mixed exterior-algebra instances");
  }
  return u.algebra;
}

void check_index(const ExteriorAlgebra& alg, int index, const char* who) {
  if (index < 0 || index >= alg.size()) {
    throw validation_error(std::string(who) + ": generator index out of range");
  }
}

/// Sorts `tuple` ascending by adjacent transpositions; returns the permutation
/// sign, or 0 if a repeated index makes the word vanish.
int sort_sign(std::vector<int>& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && tuple[j - 1] > tuple[j]) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && tuple[j - 1] == tuple[j]) return 0;
  }
  return sign;
}

std::string fmt15(double v) {
  if (v == 0.0) return "0";  // normalize −0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string fmt_cplx(cplx v) {
  return "(" + fmt15(v.real()) + "," + fmt15(v.imag()) + ")";
}

}  // namespace

ExteriorAlgebra make_algebra(std::vector<std::string> names, std::vector<int> star) {
  if (names.empty() || names.size() != star.size()) {
    throw validation_error("make_algebra: names and star map must match and be nonempty");
  }
  const int n = static_cast<int>(names.size());
  for (int i = 0; i < n; ++i) {
    if (star[i] < 0 || star[i] >= n || star[star[i]] != i) {
      throw validation_error("make_algebra: star map must be an involution");
    }
  }
  return {std::move(names), std::move(star)};
}

const ExteriorAlgebra& dirac_field_algebra() {
  static const ExteriorAlgebra alg = make_algebra(
      {"xiL", "chiL", "xiR", "chiR", "xiLs", "chiLs", "xiRs", "chiRs", "kinL", "kinR",
       "kinLs", "kinRs"},
      {4, 5, 6, 7, 0, 1, 2, 3, 10, 11, 8, 9});
  return alg;
}

ExteriorElement ext_scalar(const Biquaternion& c, const ExteriorAlgebra& alg) {
  ExteriorElement out;
  out.algebra = &alg;
  add_term(out, {}, c);
  return out;
}

ExteriorElement ext_generator(int index, const Biquaternion& coeff,
                              const ExteriorAlgebra& alg) {
  check_index(alg, index, "ext_generator");
  ExteriorElement out;
  out.algebra = &alg;
  add_term(out, {index}, coeff);
  return out;
}

ExteriorElement operator+(const ExteriorElement& u, const ExteriorElement& v) {
  ExteriorElement acc;
  acc.algebra = common_algebra(u, v, "exterior sum");
  acc.terms = u.terms;
  for (const auto& [tuple, coeff] : v.terms) add_term(acc, tuple, coeff);
  return acc;
}

ExteriorElement operator-(const ExteriorElement& u) {
  ExteriorElement out;
  out.algebra = u.algebra;
  for (const auto& [tuple, coeff] : u.terms) out.terms.emplace(tuple, -coeff);
  return out;
}

ExteriorElement operator-(const ExteriorElement& u, const ExteriorElement& v) {
  return u + (-v);
}

ExteriorElement ext_mul(const ExteriorElement& u, const ExteriorElement& v) {
  ExteriorElement out;
  out.algebra = common_algebra(u, v, "ext_mul");
  for (const auto& [tu, cu] : u.terms) {
    for (const auto& [tv, cv] : v.terms) {
      std::vector<int> merged;
      merged.reserve(tu.size() + tv.size());
      merged.insert(merged.end(), tu.begin(), tu.end());
      merged.insert(merged.end(), tv.begin(), tv.end());
      const int sign = sort_sign(merged);
      if (sign == 0) continue;  // repeated generator: g² = 0
      add_term(out, std::move(merged), static_cast<double>(sign) * (cu * cv));
    }
  }
  return out;
}

ExteriorElement operator*(const ExteriorElement& u, const ExteriorElement& v) {
  return ext_mul(u, v);
}

ExteriorElement scale_left(const Biquaternion& c, const ExteriorElement& u) {
  ExteriorElement out;
  out.algebra = u.algebra;
  for (const auto& [tuple, coeff] : u.terms) add_term(out, tuple, c * coeff);
  return out;
}

ExteriorElement scale_right(const ExteriorElement& u, const Biquaternion& c) {
  ExteriorElement out;
  out.algebra = u.algebra;
  for (const auto& [tuple, coeff] : u.terms) add_term(out, tuple, coeff * c);
  return out;
}

ExteriorElement conj_complex_ferm(const ExteriorElement& u) {
  if (u.algebra == nullptr) throw validation_error("conj_complex_ferm: empty element");
  ExteriorElement out;
  out.algebra = u.algebra;
  for (const auto& [tuple, coeff] : u.terms) {
    // (g_{i1}…g_{ik})* = g_{ik}* … g_{i1}*: star each index, reverse, then
    // re-canonicalize collecting the permutation sign.
    std::vector<int> starred;
    starred.reserve(tuple.size());
    for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
      starred.push_back(u.algebra->star[static_cast<std::size_t>(*it)]);
    }
    const int sign = sort_sign(starred);
    add_term(out, std::move(starred), static_cast<double>(sign) * conj_complex(coeff));
  }
  return out;
}

ExteriorElement conj_quat_ferm(const ExteriorElement& u) {
  // (ξχ)~ = −χ̃ξ̃: the reversal sign and the anticommutation sign cancel on
  // canonical words, leaving the generator word fixed.
  ExteriorElement out;
  out.algebra = u.algebra;
  for (const auto& [tuple, coeff] : u.terms) out.terms.emplace(tuple, conj_quat(coeff));
  return out;
}

ExteriorElement conj_herm_ferm(const ExteriorElement& u) {
  return conj_quat_ferm(conj_complex_ferm(u));
}

bool is_homogeneous(const ExteriorElement& u) {
  if (u.terms.empty()) return true;
  const std::size_t d = u.terms.begin()->first.size();
  for (const auto& [tuple, coeff] : u.terms) {
    if (tuple.size() != d) return false;
  }
  return true;
}

int degree(const ExteriorElement& u) {
  if (!is_homogeneous(u)) {
    throw validation_error("degree: element is not homogeneous");
  }
  return u.terms.empty() ? 0 : static_cast<int>(u.terms.begin()->first.size());
}

double max_abs_diff(const ExteriorElement& u, const ExteriorElement& v) {
  common_algebra(u, v, "max_abs_diff");
  double worst = 0.0;
  auto scan = [&worst](const ExteriorElement& a, const ExteriorElement& b) {
    for (const auto& [tuple, coeff] : a.terms) {
      Biquaternion other{};
      auto it = b.terms.find(tuple);
      if (it != b.terms.end()) other = it->second;
      worst = std::max(worst, max_abs_diff(coeff, other));
    }
  };
  scan(u, v);
  scan(v, u);
  return worst;
}

bool approx_equal(const ExteriorElement& u, const ExteriorElement& v, double tol) {
  return max_abs_diff(u, v) <= tol;
}

ExteriorElement scalar_coefficients(const ExteriorElement& u) {
  ExteriorElement out;
  out.algebra = u.algebra;
  for (const auto& [tuple, coeff] : u.terms) {
    add_term(out, tuple, Biquaternion{coeff.w, 0.0, 0.0, 0.0});
  }
  return out;
}

std::string to_string(const ExteriorElement& u) {
  if (u.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [tuple, coeff] : u.terms) {
    if (!first) os << "\n";
    first = false;
    if (tuple.empty()) {
      os << "1";
    } else {
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << "*";
        os << u.algebra->names[static_cast<std::size_t>(tuple[i])];
      }
    }
    os << " : w=" << fmt_cplx(coeff.w) << " x=" << fmt_cplx(coeff.x)
       << " y=" << fmt_cplx(coeff.y) << " z=" << fmt_cplx(coeff.z);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Spinor symbols and derivatives.
// ---------------------------------------------------------------------------

ExteriorElement psi_left_symbol() {
  return ext_generator(gen_xiL, proj_left) +
         ext_generator(gen_chiL, jhat * proj_left);
}

ExteriorElement psi_right_symbol() {
  return ext_generator(gen_xiR, -(jhat * proj_right)) +
         ext_generator(gen_chiR, proj_right);
}

ExteriorElement kinetic_left_symbol() { return ext_generator(gen_kinL); }
ExteriorElement kinetic_right_symbol() { return ext_generator(gen_kinR); }

ExteriorElement generator_derivative(const ExteriorElement& expr, int generator,
                                     ActionSide side) {
  if (expr.algebra == nullptr) {
    throw validation_error("generator_derivative: empty element");
  }
  check_index(*expr.algebra, generator, "generator_derivative");
  ExteriorElement out;
  out.algebra = expr.algebra;
  for (const auto& [tuple, coeff] : expr.terms) {
    auto it = std::find(tuple.begin(), tuple.end(), generator);
    if (it == tuple.end()) continue;
    const auto pos = static_cast<std::size_t>(it - tuple.begin());
    const std::size_t hops =
        side == ActionSide::left ? pos : tuple.size() - 1 - pos;
    const double sign = (hops % 2 == 0) ? 1.0 : -1.0;
    std::vector<int> rest;
    rest.reserve(tuple.size() - 1);
    rest.insert(rest.end(), tuple.begin(), it);
    rest.insert(rest.end(), it + 1, tuple.end());
    add_term(out, std::move(rest), sign * coeff);
  }
  return out;
}

ExteriorElement spinor_derivative(const ExteriorElement& expr, SpinorSlot which,
                                  ActionSide side) {
  if (expr.algebra != &dirac_field_algebra()) {
    throw validation_error("spinor_derivative: expression is not built from the "
                           "Dirac field symbols");
  }
  const bool daggered =
      which == SpinorSlot::psi_left_dag || which == SpinorSlot::psi_right_dag;
  if (daggered && side != ActionSide::left) {
    throw validation_error("spinor_derivative: daggered derivatives act from the left");
  }
  if (!daggered && side != ActionSide::right) {
    throw validation_error("spinor_derivative: undaggered derivatives act from the right");
  }

  switch (which) {
    case SpinorSlot::psi_left_dag: {
      const ExteriorElement filtered = scale_left(proj_left, expr);
      return generator_derivative(filtered, gen_xiLs, ActionSide::left) +
             scale_left(jhat,
                        generator_derivative(filtered, gen_chiLs, ActionSide::left));
    }
    case SpinorSlot::psi_right_dag: {
      const ExteriorElement filtered = scale_left(-(jhat * proj_right), expr);
      return generator_derivative(filtered, gen_xiRs, ActionSide::left) +
             scale_left(jhat,
                        generator_derivative(filtered, gen_chiRs, ActionSide::left));
    }
    case SpinorSlot::psi_left: {
      return generator_derivative(scale_right(expr, proj_left), gen_xiL,
                                  ActionSide::right) -
             generator_derivative(scale_right(expr, proj_left * jhat), gen_chiL,
                                  ActionSide::right);
    }
    case SpinorSlot::psi_right:
    default: {
      return generator_derivative(scale_right(expr, proj_right * jhat), gen_xiR,
                                  ActionSide::right) +
             generator_derivative(scale_right(expr, proj_right), gen_chiR,
                                  ActionSide::right);
    }
  }
}

DiracVariation vary_dirac_lagrangian(double mass) {
  const ExteriorElement psiLd = conj_herm_ferm(psi_left_symbol());
  const ExteriorElement psiRd = conj_herm_ferm(psi_right_symbol());

  const ExteriorElement t_kin_l = ext_mul(psiLd, ext_generator(gen_kinL, kI * one));
  const ExteriorElement t_kin_r = ext_mul(psiRd, ext_generator(gen_kinR, kI * one));
  const ExteriorElement t_mass =
      scale_right(ext_mul(psiLd, psi_right_symbol()), (-mass) * jhat);

  ExteriorElement half = t_kin_l + t_kin_r + t_mass + conj_quat_ferm(t_mass);
  DiracVariation out;
  out.lagrangian = half + conj_complex_ferm(half);
  out.left_eq = spinor_derivative(out.lagrangian, SpinorSlot::psi_left_dag,
                                  ActionSide::left);
  out.right_eq = spinor_derivative(out.lagrangian, SpinorSlot::psi_right_dag,
                                   ActionSide::left);
  return out;
}

CyclicReport cyclic_real_part(const ExteriorElement& a, const ExteriorElement& b,
                              const ExteriorElement& c, double tol) {
  common_algebra(a, b, "cyclic_real_part");
  common_algebra(b, c, "cyclic_real_part");
  const ExteriorElement bc = ext_mul(b, c);
  if (!is_homogeneous(a) || !is_homogeneous(bc)) {
    throw validation_error("cyclic_real_part: entries must be degree-homogeneous");
  }
  const int pq = degree(a) * degree(bc);
  CyclicReport report;
  report.sign = (pq % 2 == 0) ? 1.0 : -1.0;
  report.lhs_scalar = scalar_coefficients(ext_mul(a, bc));
  report.rhs_scalar =
      scalar_coefficients(scale_left(report.sign * one, ext_mul(bc, a)));
  report.max_diff = max_abs_diff(report.lhs_scalar, report.rhs_scalar);
  report.passed = report.max_diff <= tol;
  return report;
}

}  // namespace biquat
