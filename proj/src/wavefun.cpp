#include "bosesemi/wavefun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bosesemi/quantize.hpp"
#include "bosesemi/special.hpp"

namespace bosesemi {

using std::numbers::pi;

namespace {

const QuadratureOptions kQuad{};

struct Location {
  const AllowedInterval* inside = nullptr;  // allowed interval containing P
  double nearest_tp = 0.0;                  // otherwise: closest bounding turning point
};

Location locate(const std::vector<AllowedInterval>& ivs, double p) {
  Location loc;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : ivs) {
    // Rounding in lo + (hi - lo) * t may overshoot an end by an ulp or two.
    const double slack = 1e-13 * (std::abs(iv.lo) + std::abs(iv.hi));
    if (p >= iv.lo - slack && p <= iv.hi + slack) {
      loc.inside = &iv;
      return loc;
    }
    for (double tp : {iv.lo, iv.hi}) {
      if (std::abs(p - tp) < best) {
        best = std::abs(p - tp);
        loc.nearest_tp = tp;
      }
    }
  }
  if (ivs.empty()) throw DomainError("no classically allowed region at this energy");
  return loc;
}

double k_of(const ModelParams& params, double P, double E) {
  return 0.5 * std::acos(-std::clamp(detail::x_ratio(params, P, E), -1.0, 1.0));
}

// Total period summed over all allowed intervals (the orbit set at energy E).
double total_period(const ModelParams& params, double E) {
  const double ns = params.ns_real();
  return params.hbar * detail::period_integral(params, E, -ns, ns);
}

// |Im S| / hbar accumulated from turning point tp to p.
double forbidden_phase(const ModelParams& params, double E, double tp, double p) {
  const double a = std::min(tp, p) / params.hbar;
  const double b = std::max(tp, p) / params.hbar;
  return detail::forbidden_integral(params, E, a, b);
}

double resolve_energy(const ModelParams& params, int n, std::optional<double> energy) {
  if (n < 0 || n > params.N) throw DomainError("state index outside 0..N");
  if (energy) return *energy;
  return semiclassical_spectrum(params).energies[static_cast<std::size_t>(n)];
}

MomentumWavefunction normalized(std::vector<int> grid, std::vector<double> values,
                                WavefunctionKind kind, int n, double E) {
  double sum = 0.0;
  for (double v : values) sum += v;
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw ConvergenceError("semiclassical wavefunction could not be normalized");
  }
  for (double& v : values) v /= sum;
  MomentumWavefunction wf;
  wf.grid = std::move(grid);
  wf.values = std::move(values);
  wf.kind = kind;
  wf.state = n;
  wf.energy = E;
  return wf;
}

double grid_momentum(const ModelParams& params, int label) {
  return static_cast<double>(label) * params.hbar;
}

}  // namespace

std::vector<AllowedInterval> allowed_intervals(const ModelParams& params, double E) {
  params.validate();
  const auto tps = detail::turning_points_scaled(params, E);
  std::vector<AllowedInterval> out;
  for (std::size_t i = 0; i + 1 < tps.size(); ++i) {
    const double mid = 0.5 * (tps[i].p + tps[i + 1].p);
    if (std::abs(detail::x_ratio(params, mid, E)) >= 1.0) continue;
    out.push_back({tps[i].p * params.hbar, tps[i + 1].p * params.hbar, tps[i].branch,
                   tps[i + 1].branch});
  }
  return out;
}

double classical_density(const ModelParams& params, double E, double p) {
  const double P = p / params.hbar;
  const double D = detail::discriminant(params, P, E);
  if (!(D > 0.0) || std::abs(P) >= params.ns_real()) {
    throw DomainError("classical density is only defined inside the allowed region");
  }
  return 1.0 / (total_period(params, E) * std::sqrt(D));
}

double action_phase(const ModelParams& params, double E, double p) {
  const auto ivs = allowed_intervals(params, E);
  const Location loc = locate(ivs, p);
  if (loc.inside == nullptr) throw DomainError("action phase requested outside the allowed region");
  const double a = loc.inside->lo / params.hbar;
  const double b = p / params.hbar;
  if (!(b > a)) return 0.0;
  if (loc.inside->lo_branch == PotentialBranch::lower) {
    return params.hbar * integrate_turning([&](double P) { return k_of(params, P, E); }, a, b, kQuad);
  }
  return params.hbar *
         integrate_turning([&](double P) { return pi / 2.0 - k_of(params, P, E); }, a, b, kQuad);
}

double tail(const ModelParams& params, double E, double p) {
  const auto ivs = allowed_intervals(params, E);
  const Location loc = locate(ivs, p);
  if (loc.inside != nullptr) throw DomainError("tail requested inside the allowed region");
  const double P = p / params.hbar;
  const double D = std::abs(detail::discriminant(params, P, E));
  if (D == 0.0) throw DomainError("tail is singular at a turning point");
  const double w = 1.0 / (total_period(params, E) * std::sqrt(D));
  return 0.5 * w * std::exp(-2.0 * forbidden_phase(params, E, loc.nearest_tp, p));
}

MomentumWavefunction primitive(const ModelParams& params, int n, std::optional<double> energy) {
  const double E = resolve_energy(params, n, energy);
  const auto ivs = allowed_intervals(params, E);
  const double T = total_period(params, E);
  std::vector<int> grid;
  std::vector<double> values;
  for (int label = -params.N; label <= params.N; label += 2) {
    const double p = grid_momentum(params, label);
    const double P = static_cast<double>(label);
    const Location loc = locate(ivs, p);
    const double D = detail::discriminant(params, P, E);
    double value = 0.0;
    if (D == 0.0) {
      value = 0.0;  // exactly on a turning point the primitive form diverges; skip
    } else if (loc.inside != nullptr) {
      const double w = 1.0 / (T * std::sqrt(D));
      const double c = std::cos(action_phase(params, E, p) / params.hbar - pi / 4.0);
      value = 2.0 * w * c * c;
    } else {
      const double w = 1.0 / (T * std::sqrt(std::abs(D)));
      value = 0.5 * w * std::exp(-2.0 * forbidden_phase(params, E, loc.nearest_tp, p));
    }
    grid.push_back(label);
    values.push_back(value);
  }
  return normalized(std::move(grid), std::move(values), WavefunctionKind::primitive, n, E);
}

double xi_from_phase(int n, double S) {
  if (n < 0) throw DomainError("state index must be >= 0");
  const double x0 = std::sqrt(2.0 * n + 1.0);
  const double full = 0.5 * pi * x0 * x0;
  const double tol = 1e-7 * full;
  if (S < -tol || S > full + tol) throw DomainError("phase outside [0, (2n+1) pi/2]");
  S = std::clamp(S, 0.0, full);
  auto lhs = [&](double xi) {
    const double r = std::sqrt(std::max(0.0, x0 * x0 - xi * xi));
    return 0.5 * xi * r + 0.5 * x0 * x0 * (pi / 2.0 + std::asin(std::clamp(xi / x0, -1.0, 1.0)));
  };
  double lo = -x0;
  double hi = x0;
  while (hi - lo > 1e-13 * x0) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < S ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double xi_from_forbidden_phase(int n, double I) {
  if (n < 0) throw DomainError("state index must be >= 0");
  if (I < 0.0) throw DomainError("forbidden phase must be non-negative");
  const double x0 = std::sqrt(2.0 * n + 1.0);
  auto lhs = [&](double xi) {
    const double r = std::sqrt(std::max(0.0, xi * xi - x0 * x0));
    return 0.5 * xi * r - 0.5 * x0 * x0 * std::log((xi + r) / x0);
  };
  double lo = x0;
  double hi = x0 + 1.0;
  while (lhs(hi) < I) hi = x0 + 2.0 * (hi - x0);
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < I ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double xi_of_p(const ModelParams& params, int n, double E, double p) {
  const auto ivs = allowed_intervals(params, E);
  if (ivs.size() != 1 || ivs[0].lo_branch != PotentialBranch::lower ||
      ivs[0].hi_branch != PotentialBranch::lower) {
    throw UnsupportedGeometry("uniform mapping needs one orbit with both turning points on U-");
  }
  const AllowedInterval& iv = ivs[0];
  if (p >= iv.lo && p <= iv.hi) return xi_from_phase(n, action_phase(params, E, p) / params.hbar);
  const double tp = p < iv.lo ? iv.lo : iv.hi;
  const double xi = xi_from_forbidden_phase(n, forbidden_phase(params, E, tp, p));
  return p < iv.lo ? -xi : xi;
}

MomentumWavefunction uniform(const ModelParams& params, int n, std::optional<double> energy) {
  const double E = resolve_energy(params, n, energy);
  const double x0sq = 2.0 * n + 1.0;
  const double shift = 1e-7 * params.ns_real();
  std::vector<int> grid;
  std::vector<double> values;
  for (int label = -params.N; label <= params.N; label += 2) {
    double P = static_cast<double>(label);
    // The ratio sqrt|xi0^2 - xi^2| / sqrt|D| is finite at a turning point;
    // evaluate it a hair inside when a grid point lands exactly on one.
    if (detail::discriminant(params, P, E) == 0.0) P -= std::copysign(shift, P);
    const double xi = xi_of_p(params, n, E, P * params.hbar);
    const double D = std::abs(detail::discriminant(params, P, E));
    const double h = hermite(n, xi);
    const double value = std::sqrt(std::abs(x0sq - xi * xi) / D) * h * h * std::exp(-xi * xi);
    grid.push_back(label);
    values.push_back(value);
  }
  return normalized(std::move(grid), std::move(values), WavefunctionKind::uniform, n, E);
}

}  // namespace bosesemi
