#include "bosesemi/meanfield.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bosesemi/polynomial.hpp"

namespace bosesemi {

using std::numbers::pi;

namespace {

// sqrt(Ns^2 - P^2) with P = p / hbar; throws outside the rim.
double root_term(const ModelParams& params, double P) {
  const double ns = params.ns_real();
  const double r2 = ns * ns - P * P;
  if (r2 < 0.0) {
    if (r2 > -1e-12 * ns * ns) return 0.0;
    throw DomainError("momentum outside the phase space rim |p| <= Ns hbar");
  }
  return std::sqrt(r2);
}

double energy_scale(const ModelParams& params) {
  const double ns = params.ns_real();
  return std::abs(params.v) * ns + std::abs(params.g) * ns * ns + std::abs(params.eps) * ns;
}

}  // namespace

double fold_angle(double q) {
  double r = std::fmod(q, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) r -= pi;
  return r;
}

double hamiltonian(const ModelParams& params, PhasePoint pt) {
  const double P = pt.p / params.hbar;
  const double ns = params.ns_real();
  return params.eps * P + params.v * root_term(params, P) * std::cos(2.0 * pt.q) +
         0.5 * params.g * (ns * ns + P * P);
}

Gradient gradient(const ModelParams& params, PhasePoint pt) {
  const double P = pt.p / params.hbar;
  const double r = root_term(params, P);
  if (r == 0.0) throw DomainError("gradient is singular at the phase space rim");
  const double h = params.hbar;
  Gradient grad;
  grad.dq = -2.0 * params.v * r * std::sin(2.0 * pt.q);
  grad.dp = params.eps / h - params.v * P * std::cos(2.0 * pt.q) / (h * r) + params.g * P / h;
  return grad;
}

Hessian hessian(const ModelParams& params, PhasePoint pt) {
  const double P = pt.p / params.hbar;
  const double r = root_term(params, P);
  if (r == 0.0) throw DomainError("hessian is singular at the phase space rim");
  const double h = params.hbar;
  const double ns = params.ns_real();
  Hessian hs;
  hs.qq = -4.0 * params.v * r * std::cos(2.0 * pt.q);
  hs.qp = 2.0 * params.v * P * std::sin(2.0 * pt.q) / (h * r);
  hs.pp = (-params.v * std::cos(2.0 * pt.q) * ns * ns / (r * r * r) + params.g) / (h * h);
  return hs;
}

double potential_lower(const ModelParams& params, double p) {
  return hamiltonian(params, {params.v >= 0.0 ? pi / 2.0 : 0.0, p});
}

double potential_upper(const ModelParams& params, double p) {
  return hamiltonian(params, {params.v >= 0.0 ? 0.0 : pi / 2.0, p});
}

Potentials potentials(const ModelParams& params, double p) {
  return {potential_lower(params, p), potential_upper(params, p)};
}

Regime regime(const ModelParams& params) {
  const double threshold = std::abs(params.v) / params.ns_real();
  const double a = std::abs(params.g);
  if (params.g < 0.0 && std::abs(a - threshold) <= 1e-12 * threshold) return Regime::critical;
  if (params.g < 0.0 && a > threshold) return Regime::supercritical;
  return Regime::subcritical;
}

std::vector<FixedPoint> fixed_points(const ModelParams& params) {
  params.validate();
  if (params.v == 0.0) throw DomainError("fixed points need a nonzero coupling v");
  const double ns = params.ns_real();
  const double e = params.eps;
  const double v = params.v;
  const double gn = params.g * ns;

  // Stationarity on cos 2q = sigma, s = p/(hbar Ns):
  //   eps + g Ns s = sigma v s / sqrt(1 - s^2), squared into a quartic in s.
  const std::array<double, 5> quartic = {-gn * gn, -2.0 * e * gn, gn * gn - e * e - v * v,
                                         2.0 * e * gn, e * e};
  auto unsquared = [&](double s, double sigma) {
    return e + gn * s - sigma * v * s / std::sqrt(1.0 - s * s);
  };
  auto unsquared_ds = [&](double s, double sigma) {
    const double w = 1.0 - s * s;
    return gn - sigma * v / (w * std::sqrt(w));
  };
  const double tol = 1e-9 * (std::abs(e) + std::abs(gn) + std::abs(v));

  std::vector<FixedPoint> out;
  const auto roots = real_roots_in(quartic, -1.0, 1.0, 1e-6);
  for (double sigma : {1.0, -1.0}) {
    std::vector<double> accepted;
    for (double s0 : roots) {
      double s = s0;
      for (int it = 0; it < 50; ++it) {
        if (std::abs(s) >= 1.0) break;
        const double f = unsquared(s, sigma);
        const double df = unsquared_ds(s, sigma);
        if (df == 0.0) break;
        const double next = s - f / df;
        if (!(std::abs(next) < 1.0)) break;
        if (std::abs(next - s) < 1e-16) {
          s = next;
          break;
        }
        s = next;
      }
      if (!(std::abs(s) < 1.0) || std::abs(unsquared(s, sigma)) > tol) continue;
      const bool dup = std::any_of(accepted.begin(), accepted.end(),
                                   [&](double a) { return std::abs(a - s) < 1e-7; });
      if (!dup) accepted.push_back(s);
    }
    for (double s : accepted) {
      FixedPoint fp;
      fp.point = {sigma > 0.0 ? 0.0 : pi / 2.0, s * ns * params.hbar};
      fp.energy = hamiltonian(params, fp.point);
      const Hessian hs = hessian(params, fp.point);
      const double scale = energy_scale(params);
      const double lq = hs.qq;
      const double lp = hs.pp * (ns * params.hbar) * (ns * params.hbar);
      if (std::abs(lq) < 1e-9 * scale || std::abs(lp) < 1e-9 * scale) {
        fp.kind = FixedPointKind::degenerate;
      } else if (lq < 0.0 && lp < 0.0) {
        fp.kind = FixedPointKind::maximum;
      } else if (lq > 0.0 && lp > 0.0) {
        fp.kind = FixedPointKind::minimum;
      } else {
        fp.kind = FixedPointKind::saddle;
      }
      out.push_back(fp);
    }
  }

  const auto n_min = std::count_if(out.begin(), out.end(),
                                   [](const FixedPoint& f) { return f.kind == FixedPointKind::minimum; });
  for (auto& fp : out) {
    switch (fp.kind) {
      case FixedPointKind::maximum:
        fp.label = FixedPointLabel::e_plus;
        break;
      case FixedPointKind::minimum:
        fp.label = n_min > 1 ? (fp.point.p > 0.0 ? FixedPointLabel::e_minus_plus
                                                 : FixedPointLabel::e_minus_minus)
                             : FixedPointLabel::e_minus;
        break;
      case FixedPointKind::saddle:
        fp.label = FixedPointLabel::e_minus_saddle;
        break;
      case FixedPointKind::degenerate:
        fp.label = FixedPointLabel::other;
        break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FixedPoint& a, const FixedPoint& b) { return a.energy < b.energy; });
  return out;
}

namespace {

struct PhaseRate {
  double q;
  double p;
};

PhaseRate phase_rate(const ModelParams& params, double q, double p) {
  const Gradient g = gradient(params, {q, p});
  return {g.dp, -g.dq};
}

bool near_rim(const ModelParams& params, double p) {
  return std::abs(p) >= params.ns_real() * params.hbar * (1.0 - 1e-12);
}

}  // namespace

Trajectory integrate_trajectory(const ModelParams& params, PhasePoint start, double t_final,
                                double dt, int sample_every) {
  params.validate();
  if (!(dt > 0.0) || t_final < 0.0) throw DomainError("need dt > 0 and t_final >= 0");
  if (near_rim(params, start.p)) throw DomainError("trajectory start must lie inside the rim");
  sample_every = std::max(1, sample_every);

  Trajectory tr;
  double q = start.q;
  double p = start.p;
  tr.times.push_back(0.0);
  tr.points.push_back({fold_angle(q), p});
  const auto steps = static_cast<long>(std::llround(t_final / dt));
  for (long k = 1; k <= steps; ++k) {
    try {
      const PhaseRate k1 = phase_rate(params, q, p);
      const PhaseRate k2 = phase_rate(params, q + 0.5 * dt * k1.q, p + 0.5 * dt * k1.p);
      const PhaseRate k3 = phase_rate(params, q + 0.5 * dt * k2.q, p + 0.5 * dt * k2.p);
      const PhaseRate k4 = phase_rate(params, q + dt * k3.q, p + dt * k3.p);
      q += dt / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
      p += dt / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    } catch (const DomainError&) {
      tr.hit_rim = true;
      break;
    }
    if (near_rim(params, p)) {
      tr.hit_rim = true;
      break;
    }
    if (k % sample_every == 0 || k == steps) {
      tr.times.push_back(static_cast<double>(k) * dt);
      tr.points.push_back({fold_angle(q), p});
    }
  }
  return tr;
}

namespace {

struct Amplitudes {
  std::complex<double> a;
  std::complex<double> b;
};

Amplitudes gpe_rate(const ModelParams& params, const Amplitudes& s) {
  const std::complex<double> minus_i_over_h(0.0, -1.0 / params.hbar);
  const auto h1 = (params.eps + 2.0 * params.g * std::norm(s.a)) * s.a + params.v * s.b;
  const auto h2 = params.v * s.a + (-params.eps + 2.0 * params.g * std::norm(s.b)) * s.b;
  return {minus_i_over_h * h1, minus_i_over_h * h2};
}

Amplitudes axpy(const Amplitudes& x, double h, const Amplitudes& k) {
  return {x.a + h * k.a, x.b + h * k.b};
}

}  // namespace

GPETrajectory gpe_propagate(const ModelParams& params, const GPEState& state, double t_final,
                            double dt, int sample_every) {
  params.validate();
  const double ns = params.ns_real();
  if (std::abs(state.norm() - ns) > 1e-10 * ns) {
    throw DomainError("GPE state must satisfy |psi1|^2 + |psi2|^2 = Ns");
  }
  if (!(dt > 0.0) || t_final < 0.0) throw DomainError("need dt > 0 and t_final >= 0");
  sample_every = std::max(1, sample_every);

  GPETrajectory tr;
  Amplitudes s{state.psi1, state.psi2};
  tr.times.push_back(0.0);
  tr.states.push_back(state);
  const auto steps = static_cast<long>(std::llround(t_final / dt));
  for (long k = 1; k <= steps; ++k) {
    const Amplitudes k1 = gpe_rate(params, s);
    const Amplitudes k2 = gpe_rate(params, axpy(s, 0.5 * dt, k1));
    const Amplitudes k3 = gpe_rate(params, axpy(s, 0.5 * dt, k2));
    const Amplitudes k4 = gpe_rate(params, axpy(s, dt, k3));
    s.a += dt / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
    s.b += dt / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
    if (k % sample_every == 0 || k == steps) {
      tr.times.push_back(static_cast<double>(k) * dt);
      tr.states.push_back({s.a, s.b});
    }
  }
  return tr;
}

PhasePoint to_phase_point(const ModelParams& params, const GPEState& state) {
  const double p = (std::norm(state.psi1) - std::norm(state.psi2)) * params.hbar;
  const double q = 0.5 * (std::arg(state.psi2) - std::arg(state.psi1));
  return {fold_angle(q), p};
}

GPEState from_phase_point(const ModelParams& params, PhasePoint pt) {
  const double ns = params.ns_real();
  const double P = pt.p / params.hbar;
  const double n1 = std::max(0.0, 0.5 * (ns + P));
  const double n2 = std::max(0.0, 0.5 * (ns - P));
  return {std::polar(std::sqrt(n1), -pt.q), std::polar(std::sqrt(n2), pt.q)};
}

std::string_view to_string(FixedPointKind kind) {
  switch (kind) {
    case FixedPointKind::maximum: return "maximum";
    case FixedPointKind::minimum: return "minimum";
    case FixedPointKind::saddle: return "saddle";
    case FixedPointKind::degenerate: return "degenerate";
  }
  return "?";
}

std::string_view to_string(FixedPointLabel label) {
  switch (label) {
    case FixedPointLabel::e_plus: return "E+";
    case FixedPointLabel::e_minus: return "E-";
    case FixedPointLabel::e_minus_plus: return "E-+";
    case FixedPointLabel::e_minus_minus: return "E--";
    case FixedPointLabel::e_minus_saddle: return "E-saddle";
    case FixedPointLabel::other: return "other";
  }
  return "?";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
  }
  return "?";
}

}  // namespace bosesemi
