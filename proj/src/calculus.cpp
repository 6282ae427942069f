#include "biquat/calculus.hpp"

#include <cmath>

namespace biquat {

namespace {

constexpr cplx kI{0.0, 1.0};

bool table_kind_ok(DerivKind kind) {
  return kind == DerivKind::d || kind == DerivKind::d_tilde;
}

// Scalar-part projection 4a₀ = 2a + 2ã as a biquaternion.
Biquaternion four_scalar(const Biquaternion& a) { return {4.0 * a.w, 0.0, 0.0, 0.0}; }

bool finite(const Biquaternion& a) {
  return std::isfinite(a.w.real()) && std::isfinite(a.w.imag()) &&
         std::isfinite(a.x.real()) && std::isfinite(a.x.imag()) &&
         std::isfinite(a.y.real()) && std::isfinite(a.y.imag()) &&
         std::isfinite(a.z.real()) && std::isfinite(a.z.imag());
}

}  // namespace

Biquaternion identity_table(DerivKind kind, SlotKind slot) {
  return identity_table(kind, slot, one);
}

Biquaternion identity_table(DerivKind kind, SlotKind slot, const Biquaternion& a) {
  if (!table_kind_ok(kind)) {
    throw validation_error("identity_table: rows exist only for d and d_tilde");
  }
  const bool same_orientation = (kind == DerivKind::d) == (slot == SlotKind::q);
  // ∂(aq), ∂̃(aq̃): −2ã.   ∂(aq̃), ∂̃(aq): 4a₀.
  return same_orientation ? -2.0 * conj_quat(a) : four_scalar(a);
}

Biquaternion vector_identity_table(DerivKind kind, SlotKind slot) {
  return vector_identity_table(kind, slot, one);
}

Biquaternion vector_identity_table(DerivKind kind, SlotKind slot, const Biquaternion& a) {
  if (!table_kind_ok(kind)) {
    throw validation_error("vector_identity_table: rows exist only for d and d_tilde");
  }
  const bool same_orientation = (kind == DerivKind::d) == (slot == SlotKind::q);
  // Rows interchanged vertically relative to the unconstrained table.
  return same_orientation ? four_scalar(a) : -2.0 * conj_quat(a);
}

// ---------------------------------------------------------------------------
// Monomials.
// ---------------------------------------------------------------------------

QuaternionMonomial& QuaternionMonomial::times(const Biquaternion& c) {
  if (!factors.empty() && !factors.back().is_slot) {
    factors.back().constant = factors.back().constant * c;
  } else {
    factors.push_back({false, SlotKind::q, c});
  }
  return *this;
}

QuaternionMonomial& QuaternionMonomial::times_q() {
  if (factors.empty() || factors.back().is_slot) times(one);
  factors.push_back({true, SlotKind::q, one});
  return *this;
}

QuaternionMonomial& QuaternionMonomial::times_q_tilde() {
  if (factors.empty() || factors.back().is_slot) times(one);
  factors.push_back({true, SlotKind::q_tilde, one});
  return *this;
}

QuaternionMonomial monomial(const Biquaternion& lead) {
  QuaternionMonomial m;
  m.times(lead);
  return m;
}

void validate(const QuaternionMonomial& mono) {
  if (mono.factors.empty()) throw validation_error("monomial: empty factor list");
  bool expect_slot = false;  // pattern C (S C)*
  for (const auto& f : mono.factors) {
    if (f.is_slot != expect_slot) {
      throw validation_error("monomial: constants and slots must alternate");
    }
    expect_slot = !expect_slot;
  }
  if (mono.factors.back().is_slot) {
    throw validation_error("monomial: must end with a constant factor");
  }
}

Biquaternion evaluate(const QuaternionMonomial& mono, const Biquaternion& q) {
  validate(mono);
  Biquaternion acc = one;
  for (const auto& f : mono.factors) {
    acc = acc * (f.is_slot ? (f.slot == SlotKind::q ? q : conj_quat(q)) : f.constant);
  }
  return acc;
}

Biquaternion evaluate(const MonomialSum& sum, const Biquaternion& q) {
  Biquaternion acc{};
  for (const auto& m : sum) acc = acc + evaluate(m, q);
  return acc;
}

namespace {

using Factors = std::vector<MonomialFactor>;

// Mirror of a word: reversed factor order, constants quaternion-conjugated,
// q ↔ q̃ slots swapped (the action of conj_quat on the word as a product).
Factors mirror(const Factors& word) {
  Factors out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    MonomialFactor f = *it;
    if (f.is_slot) {
      f.slot = (f.slot == SlotKind::q) ? SlotKind::q_tilde : SlotKind::q;
    } else {
      f.constant = conj_quat(f.constant);
    }
    out.push_back(f);
  }
  return out;
}

QuaternionMonomial splice(cplx scale, const Factors& left, const Factors& right) {
  QuaternionMonomial m;
  m.times(scale * one);
  for (const auto& f : left) {
    if (f.is_slot) {
      if (f.slot == SlotKind::q) m.times_q(); else m.times_q_tilde();
    } else {
      m.times(f.constant);
    }
  }
  for (const auto& f : right) {
    if (f.is_slot) {
      if (f.slot == SlotKind::q) m.times_q(); else m.times_q_tilde();
    } else {
      m.times(f.constant);
    }
  }
  return m;
}

}  // namespace

MonomialSum differentiate_monomial(const QuaternionMonomial& mono, DerivKind kind,
                                   VariableModel model, ActionSide side) {
  validate(mono);

  // Starred kinds: holomorphic monomials are annihilated in the unconstrained
  // model; over real vector degrees of freedom conjugation is inert, so
  // d_star ≡ d_tilde and d_dagger ≡ d.
  if (kind == DerivKind::d_star || kind == DerivKind::d_dagger) {
    if (model == VariableModel::unconstrained) return {};
    kind = (kind == DerivKind::d_star) ? DerivKind::d_tilde : DerivKind::d;
  }

  MonomialSum out;
  const auto& fs = mono.factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_slot) continue;
    const Factors left(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
    const Factors right(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1, fs.end());

    bool same_orientation = (kind == DerivKind::d) == (fs[i].slot == SlotKind::q);
    // Vector model: table rows interchanged.
    if (model == VariableModel::vector_real) same_orientation = !same_orientation;

    if (same_orientation) {
      // −2·L̃·R from the left, −2·L·R̃ from the right.
      if (side == ActionSide::left) {
        out.push_back(splice(-2.0, mirror(left), right));
      } else {
        out.push_back(splice(-2.0, left, mirror(right)));
      }
    } else {
      // 4·(L)₀·R resolved without scalar projection: 2·L·R + 2·L̃·R
      // (and mirrored on the right).
      if (side == ActionSide::left) {
        out.push_back(splice(2.0, left, right));
        out.push_back(splice(2.0, mirror(left), right));
      } else {
        out.push_back(splice(2.0, left, right));
        out.push_back(splice(2.0, left, mirror(right)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite differences.
// ---------------------------------------------------------------------------

namespace {

cplx* component_ptr(Biquaternion& a, int mu) {
  switch (mu) {
    case 0: return &a.w;
    case 1: return &a.x;
    case 2: return &a.y;
    default: return &a.z;
  }
}

}  // namespace

Biquaternion fd_derivative(const std::function<Biquaternion(const Biquaternion&)>& f,
                           const Biquaternion& q0, DerivKind kind, VariableModel model,
                           double h, ActionSide side) {
  if (h <= 0.0) throw validation_error("fd_derivative: step must be positive");
  if (model == VariableModel::vector_real && !is_hermitean(q0, 1e-10)) {
    throw validation_error(
        "fd_derivative: vector model requires a hermitean (four-vector) point");
  }

  const bool starred = kind == DerivKind::d_star || kind == DerivKind::d_dagger;
  const bool tilded = kind == DerivKind::d_tilde || kind == DerivKind::d_dagger;

  // Prefix units for assembly: (1, ê) for ∂, (1, −ê) for ∂̃, where
  // ê = î,ĵ,k̂ unconstrained and ê = iî,iĵ,ik̂ in the vector model.  The
  // starred kinds keep the ∂/∂̃ unit pattern unconstrained but conjugate the
  // imaginary units in the vector model (so there d_star ≡ d_tilde and
  // d_dagger ≡ d on real degrees of freedom).
  const cplx unit_scale = (model == VariableModel::unconstrained) ? cplx(1.0) : kI;
  const Biquaternion units[4] = {one, unit_scale * ihat, unit_scale * jhat,
                                 unit_scale * khat};
  const bool flip_vector_units =
      (model == VariableModel::unconstrained) ? tilded : (tilded != starred);

  auto bump_eval = [&](int mu, cplx delta) {
    Biquaternion q = q0;
    if (model == VariableModel::unconstrained) {
      *component_ptr(q, mu) += delta;
    } else {
      // Real degrees of freedom (t, x, y, z) of q = t + i x⃗: a real step in
      // dof μ>0 moves the component along i.
      *component_ptr(q, mu) += (mu == 0) ? delta : kI * delta;
    }
    Biquaternion v = f(q);
    if (!finite(v)) throw validation_error("fd_derivative: non-finite evaluation");
    return v;
  };

  Biquaternion result{};
  for (int mu = 0; mu < 4; ++mu) {
    // Central difference along the real direction of dof μ.
    Biquaternion d_re = (1.0 / (2.0 * h)) * (bump_eval(mu, h) - bump_eval(mu, -h));
    Biquaternion partial;
    if (model == VariableModel::vector_real) {
      partial = d_re;  // real dof: plain derivative; starred kinds alias.
    } else {
      Biquaternion d_im =
          (1.0 / (2.0 * h)) * (bump_eval(mu, kI * h) - bump_eval(mu, -kI * h));
      // Wirtinger: ∂ = (∂_re − i∂_im)/2, ∂* = (∂_re + i∂_im)/2.
      partial = 0.5 * (d_re + (starred ? kI : -kI) * d_im);
    }
    Biquaternion unit = units[mu];
    if (flip_vector_units && mu > 0) unit = -unit;
    result = result + (side == ActionSide::left ? unit * partial : partial * unit);
  }
  return result;
}

Biquaternion extremum_residual(const std::function<cplx(const Biquaternion&)>& f,
                               const Biquaternion& q0, double h) {
  if (h <= 0.0) throw validation_error("extremum_residual: step must be positive");
  const double imag_mag =
      std::abs(q0.w.imag()) + std::abs(q0.x.imag()) + std::abs(q0.y.imag()) +
      std::abs(q0.z.imag());
  if (imag_mag > 1e-10) {
    throw validation_error("extremum_residual: point must be a real quaternion");
  }
  const cplx f0 = f(q0);
  if (std::abs(f0.imag()) >= 1e-10) {
    throw validation_error("extremum_residual: function is not real-valued at q0");
  }

  auto bump_eval = [&](int mu, double delta) {
    Biquaternion q = q0;
    *component_ptr(q, mu) += delta;
    const cplx v = f(q);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw validation_error("extremum_residual: non-finite evaluation");
    }
    return v.real();
  };

  const Biquaternion units[4] = {one, ihat, jhat, khat};
  Biquaternion grad{};
  for (int mu = 0; mu < 4; ++mu) {
    const double g = (bump_eval(mu, h) - bump_eval(mu, -h)) / (2.0 * h);
    grad = grad + g * units[mu];
  }
  return grad;
}

}  // namespace biquat
