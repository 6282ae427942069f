#include "biquat/fields.hpp"

#include <cmath>

namespace biquat {

namespace {

constexpr cplx kI{0.0, 1.0};

Point4 bump(Point4 p, int mu, double delta) {
  switch (mu) {
    case 0: p.t += delta; break;
    case 1: p.x += delta; break;
    case 2: p.y += delta; break;
    case 3: p.z += delta; break;
    default: throw validation_error("coordinate index must be 0..3");
  }
  return p;
}

bool all_finite(const Biquaternion& a) {
  return std::isfinite(a.w.real()) && std::isfinite(a.w.imag()) &&
         std::isfinite(a.x.real()) && std::isfinite(a.x.imag()) &&
         std::isfinite(a.y.real()) && std::isfinite(a.y.imag()) &&
         std::isfinite(a.z.real()) && std::isfinite(a.z.imag());
}

Biquaternion checked(const Biquaternion& a, const char* what) {
  if (!all_finite(a)) {
    throw field_domain_error(std::string("finite differences produced a non-finite "
                                         "value in ") +
                             what);
  }
  return a;
}

double poly_pow(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

Polynomial poly_partial(const Polynomial& poly, int mu) {
  Polynomial out;
  for (const PolyTerm& term : poly.terms) {
    PolyTerm d = term;
    int* exponent = nullptr;
    switch (mu) {
      case 0: exponent = &d.pt; break;
      case 1: exponent = &d.px; break;
      case 2: exponent = &d.py; break;
      case 3: exponent = &d.pz; break;
      default: throw validation_error("coordinate index must be 0..3");
    }
    if (*exponent == 0) continue;
    d.coeff *= *exponent;
    *exponent -= 1;
    out.terms.push_back(d);
  }
  return out;
}

/// amp · exp(c₀t + c₁x + c₂y + c₃z): the analytic exponential family shared by
/// plane waves (value, first, and second derivatives are all proportional).
BiquatField exp_field(const Biquaternion& amp, const std::array<cplx, 4>& c) {
  auto phase = [c](const Point4& p) {
    return std::exp(c[0] * p.t + c[1] * p.x + c[2] * p.y + c[3] * p.z);
  };
  return BiquatField::analytic(
      [amp, phase](const Point4& p) { return phase(p) * amp; },
      [amp, phase, c](int mu, const Point4& p) { return c[mu] * phase(p) * amp; },
      [amp, phase, c](int mu, int nu, const Point4& p) {
        return c[mu] * c[nu] * phase(p) * amp;
      });
}

}  // namespace

BiquatField BiquatField::analytic(Fn value, PartialFn partial, SecondFn second) {
  BiquatField f;
  f.value_ = std::move(value);
  f.partial_ = std::move(partial);
  f.second_ = std::move(second);
  f.backend_ = DerivBackend::analytic;
  return f;
}

BiquatField BiquatField::finite_difference(Fn value, double h) {
  BiquatField f;
  f.value_ = std::move(value);
  f.backend_ = DerivBackend::fd;
  f.h_ = h;
  return f;
}

Biquaternion BiquatField::value(const Point4& p) const { return value_(p); }

Biquaternion BiquatField::partial(int mu, const Point4& p) const {
  if (partial_) return partial_(mu, p);
  const cplx inv2h(1.0 / (2.0 * h_));
  return checked(inv2h * (value_(bump(p, mu, h_)) - value_(bump(p, mu, -h_))),
                 "partial");
}

Biquaternion BiquatField::second_partial(int mu, int nu, const Point4& p) const {
  if (second_) return second_(mu, nu, p);
  if (partial_) {
    const cplx inv2h(1.0 / (2.0 * h_));
    return checked(
        inv2h * (partial_(mu, bump(p, nu, h_)) - partial_(mu, bump(p, nu, -h_))),
        "second_partial");
  }
  if (mu == nu) {
    const cplx invh2(1.0 / (h_ * h_));
    return checked(invh2 * (value_(bump(p, mu, h_)) - 2.0 * value_(p) +
                            value_(bump(p, mu, -h_))),
                   "second_partial");
  }
  const cplx inv4h2(1.0 / (4.0 * h_ * h_));
  const Biquaternion pp = value_(bump(bump(p, mu, h_), nu, h_));
  const Biquaternion pm = value_(bump(bump(p, mu, h_), nu, -h_));
  const Biquaternion mp = value_(bump(bump(p, mu, -h_), nu, h_));
  const Biquaternion mm = value_(bump(bump(p, mu, -h_), nu, -h_));
  return checked(inv4h2 * (pp - pm - mp + mm), "second_partial");
}

BiquatField BiquatField::with_fd_backend(double h) const {
  return finite_difference(value_, h);
}

BiquatField field_add(const BiquatField& u, const BiquatField& v) {
  if (u.backend() == DerivBackend::analytic && v.backend() == DerivBackend::analytic) {
    return BiquatField::analytic(
        [u, v](const Point4& p) { return u.value(p) + v.value(p); },
        [u, v](int mu, const Point4& p) { return u.partial(mu, p) + v.partial(mu, p); },
        [u, v](int mu, int nu, const Point4& p) {
          return u.second_partial(mu, nu, p) + v.second_partial(mu, nu, p);
        });
  }
  const double h = std::min(u.step(), v.step());
  return BiquatField::finite_difference(
      [u, v](const Point4& p) { return u.value(p) + v.value(p); }, h);
}

BiquatField field_scale(cplx s, const BiquatField& u) {
  return field_lmul(s * one, u);
}

BiquatField field_lmul(const Biquaternion& c, const BiquatField& u) {
  if (u.backend() == DerivBackend::analytic) {
    return BiquatField::analytic(
        [c, u](const Point4& p) { return c * u.value(p); },
        [c, u](int mu, const Point4& p) { return c * u.partial(mu, p); },
        [c, u](int mu, int nu, const Point4& p) {
          return c * u.second_partial(mu, nu, p);
        });
  }
  return BiquatField::finite_difference(
      [c, u](const Point4& p) { return c * u.value(p); }, u.step());
}

BiquatField field_rmul(const BiquatField& u, const Biquaternion& c) {
  if (u.backend() == DerivBackend::analytic) {
    return BiquatField::analytic(
        [c, u](const Point4& p) { return u.value(p) * c; },
        [c, u](int mu, const Point4& p) { return u.partial(mu, p) * c; },
        [c, u](int mu, int nu, const Point4& p) {
          return u.second_partial(mu, nu, p) * c;
        });
  }
  return BiquatField::finite_difference(
      [c, u](const Point4& p) { return u.value(p) * c; }, u.step());
}

BiquatField field_constant(const Biquaternion& c) {
  return BiquatField::analytic([c](const Point4&) { return c; },
                               [](int, const Point4&) { return Biquaternion{}; },
                               [](int, int, const Point4&) { return Biquaternion{}; });
}

double Polynomial::eval(const Point4& p) const {
  double sum = 0.0;
  for (const PolyTerm& term : terms) {
    sum += term.coeff * poly_pow(p.t, term.pt) * poly_pow(p.x, term.px) *
           poly_pow(p.y, term.py) * poly_pow(p.z, term.pz);
  }
  return sum;
}

double Polynomial::partial(int mu, const Point4& p) const {
  return poly_partial(*this, mu).eval(p);
}

double Polynomial::second_partial(int mu, int nu, const Point4& p) const {
  return poly_partial(poly_partial(*this, mu), nu).eval(p);
}

BiquatField em_zero() { return field_constant(Biquaternion{}); }

BiquatField em_plane_wave(Vec3 k, Vec3 polarization, double amplitude, double phase0) {
  const double omega = norm(k);
  if (omega == 0.0) {
    throw validation_error("em_plane_wave: wave vector must be nonzero");
  }
  if (std::abs(dot(k, polarization)) >
      1e-10 * std::max(1.0, norm(k) * norm(polarization))) {
    throw validation_error("em_plane_wave: polarization must be transverse (eps.k = 0)");
  }
  // u(x) = k⃗·x⃗ − ωt + φ₀;  A = i ε⃗ a cos u.
  auto u = [k, omega, phase0](const Point4& p) {
    return k.x * p.x + k.y * p.y + k.z * p.z - omega * p.t + phase0;
  };
  const std::array<double, 4> du{-omega, k.x, k.y, k.z};
  const Biquaternion eps = kI * amplitude * pure(polarization);
  return BiquatField::analytic(
      [u, eps](const Point4& p) { return std::cos(u(p)) * eps; },
      [u, du, eps](int mu, const Point4& p) { return -std::sin(u(p)) * du[mu] * eps; },
      [u, du, eps](int mu, int nu, const Point4& p) {
        return -std::cos(u(p)) * du[mu] * du[nu] * eps;
      });
}

BiquatField em_constant_b(Vec3 b) {
  return BiquatField::analytic(
      [b](const Point4& p) { return ipure(0.5 * cross(b, Vec3{p.x, p.y, p.z})); },
      [b](int mu, const Point4&) {
        if (mu == 0) return Biquaternion{};
        Vec3 e{mu == 1 ? 1.0 : 0.0, mu == 2 ? 1.0 : 0.0, mu == 3 ? 1.0 : 0.0};
        return ipure(0.5 * cross(b, e));
      },
      [](int, int, const Point4&) { return Biquaternion{}; });
}

BiquatField em_coulomb(double q, double exclusion) {
  auto r_checked = [exclusion](const Point4& p) {
    const double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (r <= exclusion) {
      throw field_domain_error("em_coulomb: evaluation inside the exclusion radius");
    }
    return r;
  };
  return BiquatField::analytic(
      [q, r_checked](const Point4& p) {
        return Biquaternion{q / r_checked(p), 0.0, 0.0, 0.0};
      },
      [q, r_checked](int mu, const Point4& p) {
        if (mu == 0) return Biquaternion{};
        const double r = r_checked(p);
        const double xs[3] = {p.x, p.y, p.z};
        return Biquaternion{-q * xs[mu - 1] / (r * r * r), 0.0, 0.0, 0.0};
      },
      [q, r_checked](int mu, int nu, const Point4& p) {
        if (mu == 0 || nu == 0) return Biquaternion{};
        const double r = r_checked(p);
        const double xs[3] = {p.x, p.y, p.z};
        const double delta = (mu == nu) ? 1.0 : 0.0;
        const double r5 = r * r * r * r * r;
        return Biquaternion{q * (3.0 * xs[mu - 1] * xs[nu - 1] - delta * r * r) / r5, 0.0,
                            0.0, 0.0};
      });
}

namespace {

/// Assembles ∂ᵗφ − i∇⃗φ (and its derivatives) from a scalar polynomial's
/// derivative lattice: component μ of A is s_μ ∂_μφ with s = (+1, −i, −i, −i)
/// placed on (1, î, ĵ, k̂).
Biquaternion gradient_four_vector(const Polynomial& phi, int order, int d1, int d2,
                                  const Point4& p) {
  auto d = [&](int mu) {
    switch (order) {
      case 0: return phi.partial(mu, p);
      case 1: return phi.second_partial(mu, d1, p);
      default: {
        const Polynomial pm = poly_partial(poly_partial(phi, d1), d2);
        return pm.partial(mu, p);
      }
    }
  };
  return Biquaternion{d(0), 0.0, 0.0, 0.0} - kI * pure(Vec3{d(1), d(2), d(3)});
}

}  // namespace

BiquatField em_pure_gauge(const Polynomial& phi) {
  return BiquatField::analytic(
      [phi](const Point4& p) { return gradient_four_vector(phi, 0, 0, 0, p); },
      [phi](int mu, const Point4& p) { return gradient_four_vector(phi, 1, mu, 0, p); },
      [phi](int mu, int nu, const Point4& p) {
        return gradient_four_vector(phi, 2, mu, nu, p);
      });
}

BiquatField em_custom_polynomial(const std::array<Polynomial, 4>& components) {
  auto assemble = [](const std::array<double, 4>& c) {
    return Biquaternion{c[0], 0.0, 0.0, 0.0} + ipure(Vec3{c[1], c[2], c[3]});
  };
  return BiquatField::analytic(
      [components, assemble](const Point4& p) {
        return assemble({components[0].eval(p), components[1].eval(p),
                         components[2].eval(p), components[3].eval(p)});
      },
      [components, assemble](int mu, const Point4& p) {
        return assemble({components[0].partial(mu, p), components[1].partial(mu, p),
                         components[2].partial(mu, p), components[3].partial(mu, p)});
      },
      [components, assemble](int mu, int nu, const Point4& p) {
        return assemble({components[0].second_partial(mu, nu, p),
                         components[1].second_partial(mu, nu, p),
                         components[2].second_partial(mu, nu, p),
                         components[3].second_partial(mu, nu, p)});
      });
}

BiquatField em_gauge_shift(const BiquatField& a, const Polynomial& phi) {
  return field_add(a, em_pure_gauge(phi));
}

bool on_shell(const PlaneWaveSpec& spec, double tol) {
  const double e2 = spec.energy * spec.energy;
  const double p2 = dot(spec.momentum, spec.momentum);
  return std::abs(e2 - p2 - spec.mass * spec.mass) <= tol;
}

ChiralFieldPair plane_wave_fields(const PlaneWaveSpec& spec) {
  const std::array<cplx, 4> c{-kI * spec.energy, kI * spec.momentum.x,
                              kI * spec.momentum.y, kI * spec.momentum.z};
  return {exp_field(spec.amplitudes.left, c), exp_field(spec.amplitudes.right, c)};
}

ChiralSpinorPair solve_plane_wave_amplitudes(double energy, Vec3 momentum, double mass,
                                             const Biquaternion& left_amplitude) {
  if (mass <= 0.0) {
    throw validation_error("solve_plane_wave_amplitudes: mass must be positive");
  }
  // From i∂ψ_L = mψ_Rĵ for the plane-wave phase: ψ_R = (−E + ip⃗) ψ_L ĵ / m.
  const Biquaternion factor = cplx(-energy) * one + kI * pure(momentum);
  const Biquaternion right = (1.0 / mass) * (factor * left_amplitude * jhat);
  return {left_amplitude, right};
}

BiquatField gaussian_packet(const Biquaternion& amp, double omega, double sigma) {
  const double inv_s2 = 1.0 / (sigma * sigma);
  auto envelope = [omega, inv_s2](const Point4& p) {
    const double r2 = p.x * p.x + p.y * p.y + p.z * p.z;
    return std::exp(cplx(-0.5 * r2 * inv_s2, -omega * p.t));
  };
  // d_μ log f = (−iω, −x/s², −y/s², −z/s²).
  auto dlog = [omega, inv_s2](int mu, const Point4& p) -> cplx {
    switch (mu) {
      case 0: return {0.0, -omega};
      case 1: return {-p.x * inv_s2, 0.0};
      case 2: return {-p.y * inv_s2, 0.0};
      default: return {-p.z * inv_s2, 0.0};
    }
  };
  auto d2log = [inv_s2](int mu, int nu) -> cplx {
    return (mu == nu && mu != 0) ? cplx(-inv_s2, 0.0) : cplx(0.0);
  };
  return BiquatField::analytic(
      [amp, envelope](const Point4& p) { return envelope(p) * amp; },
      [amp, envelope, dlog](int mu, const Point4& p) {
        return dlog(mu, p) * envelope(p) * amp;
      },
      [amp, envelope, dlog, d2log](int mu, int nu, const Point4& p) {
        return (dlog(mu, p) * dlog(nu, p) + d2log(mu, nu)) * envelope(p) * amp;
      });
}

BiquatField spinor_gauge_phase(const BiquatField& psi, const Polynomial& phi) {
  auto phase = [phi](const Point4& p) { return std::exp(kI * phi.eval(p)); };
  if (psi.backend() == DerivBackend::analytic) {
    return BiquatField::analytic(
        [psi, phase](const Point4& p) { return phase(p) * psi.value(p); },
        [psi, phase, phi](int mu, const Point4& p) {
          return phase(p) * (kI * phi.partial(mu, p) * psi.value(p) + psi.partial(mu, p));
        },
        nullptr);
  }
  return BiquatField::finite_difference(
      [psi, phase](const Point4& p) { return phase(p) * psi.value(p); }, psi.step());
}

}  // namespace biquat
