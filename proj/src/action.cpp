#include "bosesemi/action.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "bosesemi/meanfield.hpp"
#include "bosesemi/polynomial.hpp"
#include "bosesemi/special.hpp"

namespace bosesemi {

using std::numbers::pi;

namespace {

void require_coupling(const ModelParams& params) {
  params.validate();
  if (params.v == 0.0) throw DomainError("classical actions need a nonzero coupling v");
}

double y_term(const ModelParams& p, double P, double E) {
  const double ns = p.ns_real();
  return p.eps * P + 0.5 * p.g * (ns * ns + P * P) - E;
}

double rim_root(const ModelParams& p, double P) {
  const double ns = p.ns_real();
  return std::sqrt(std::max(0.0, ns * ns - P * P));
}

double envelope(const ModelParams& p, double P, PotentialBranch b) {
  const double sign = b == PotentialBranch::lower ? -1.0 : 1.0;
  return y_term(p, P, 0.0) + sign * std::abs(p.v) * rim_root(p, P);
}

double envelope_dP(const ModelParams& p, double P, PotentialBranch b) {
  const double sign = b == PotentialBranch::lower ? -1.0 : 1.0;
  const double r = rim_root(p, P);
  return p.eps + p.g * P - sign * std::abs(p.v) * P / r;
}

double energy_scale(const ModelParams& p) {
  const double ns = p.ns_real();
  return std::abs(p.eps) * ns + std::abs(p.v) * ns + std::abs(p.g) * ns * ns;
}

// Turning-point quartic Y^2 - v^2 (Ns^2 - P^2) = 0 in s = P / Ns, normalized.
std::array<double, 5> turning_quartic(const ModelParams& p, double E) {
  const double ns = p.ns_real();
  const double c0 = 0.5 * p.g * ns * ns - E;
  const double v2 = p.v * p.v;
  std::array<double, 5> c = {p.g * p.g / 4.0 * ns * ns * ns * ns, p.g * p.eps * ns * ns * ns,
                             (p.eps * p.eps + p.g * c0 + v2) * ns * ns, 2.0 * p.eps * c0 * ns,
                             c0 * c0 - v2 * ns * ns};
  double big = 0.0;
  for (double x : c) big = std::max(big, std::abs(x));
  if (big > 0.0) {
    for (double& x : c) x /= big;
  }
  return c;
}

// Newton refinement of U_branch(P) = E starting from a quartic root.
double polish_turning(const ModelParams& p, double P, double E, PotentialBranch b) {
  const double ns = p.ns_real();
  double x = P;
  for (int it = 0; it < 20; ++it) {
    if (!(std::abs(x) < ns)) return P;
    const double f = envelope(p, x, b) - E;
    const double df = envelope_dP(p, x, b);
    if (df == 0.0 || !std::isfinite(df)) break;
    const double step = f / df;
    const double next = x - step;
    if (!(std::abs(next) < ns) || std::abs(next - P) > 1e-6 * ns) return x;
    x = next;
    if (std::abs(step) <= 1e-15 * ns) break;
  }
  return x;
}

// Segment ends for quadrature on [a, b]: the turning points plus the momenta
// of the fixed points, where X has an extremum and the integrands form a
// narrow cusp once E is close to that fixed-point energy.
std::vector<double> breakpoints_in(const ModelParams& params, const std::vector<TurningPoint>& tps,
                                   double a, double b) {
  std::vector<double> pts{a, b};
  for (const auto& tp : tps) {
    if (tp.p > a && tp.p < b) pts.push_back(tp.p);
  }
  for (const auto& fp : fixed_points(params)) {
    const double P = fp.point.p / params.hbar;
    if (P > a && P < b) pts.push_back(P);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

const QuadratureOptions kQuad{};

struct WellData {
  double b;  // inner turning point of the left lobe
  double c;  // inner turning point of the right lobe
  bool has_b;
  bool has_c;
};

// Inner turning points on the U- curve adjacent to the barrier (P-units).
WellData inner_points(const std::vector<TurningPoint>& tps, double P_barr) {
  WellData w{P_barr, P_barr, false, false};
  for (const auto& tp : tps) {
    if (tp.branch != PotentialBranch::lower) continue;
    if (tp.p < P_barr) {
      w.b = w.has_b ? std::max(w.b, tp.p) : tp.p;
      w.has_b = true;
    } else if (tp.p > P_barr) {
      if (!w.has_c || tp.p < w.c) w.c = tp.p;
      w.has_c = true;
    }
  }
  return w;
}

struct LobeBounds {
  double lo;
  double hi;
};

LobeBounds lobe_bounds(const ModelParams& params, double E, Lobe lobe) {
  const double ns = params.ns_real();
  if (lobe == Lobe::whole) return {-ns, ns};
  const BarrierInfo info = barrier(params);
  const double P_barr = info.p_barr / params.hbar;
  double b = P_barr;
  double c = P_barr;
  if (E < info.E_barr) {
    const WellData w = inner_points(detail::turning_points_scaled(params, E), P_barr);
    b = w.has_b ? w.b : P_barr;
    c = w.has_c ? w.c : P_barr;
    // Below a lobe's minimum the lobe is empty.
    if (lobe == Lobe::left && !w.has_b) return {-ns, -ns};
    if (lobe == Lobe::right && !w.has_c) return {ns, ns};
  }
  return lobe == Lobe::left ? LobeBounds{-ns, b} : LobeBounds{c, ns};
}

void check_energy(const ModelParams& params, double E) {
  const EnergyRange range = classical_range(params);
  const double tol = 1e-9 * energy_scale(params);
  if (E < range.min - tol || E > range.max + tol) {
    throw DomainError("energy outside the classical range");
  }
}

}  // namespace

namespace detail {

double x_ratio(const ModelParams& params, double P, double E) {
  const double Y = y_term(params, P, E);
  const double r = std::abs(params.v) * rim_root(params, P);
  if (r == 0.0) {
    if (Y == 0.0) return 0.0;
    return Y > 0.0 ? -std::numeric_limits<double>::infinity()
                   : std::numeric_limits<double>::infinity();
  }
  return -Y / r;
}

double discriminant(const ModelParams& params, double P, double E) {
  const double ns = params.ns_real();
  const double Y = y_term(params, P, E);
  return params.v * params.v * (ns * ns - P * P) - Y * Y;
}

std::vector<TurningPoint> turning_points_scaled(const ModelParams& params, double E) {
  const double ns = params.ns_real();
  const auto quartic = turning_quartic(params, E);
  std::vector<TurningPoint> out;
  for (double s : real_roots_in(quartic, -1.0, 1.0, 1e-7)) {
    if (std::abs(s) >= 1.0) continue;
    const double P0 = s * ns;
    const auto branch =
        y_term(params, P0, E) > 0.0 ? PotentialBranch::lower : PotentialBranch::upper;
    const double P = polish_turning(params, P0, E, branch);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const TurningPoint& t) {
      return t.branch == branch && std::abs(t.p - P) < 1e-10 * ns;
    });
    if (!dup) out.push_back({P, branch});
  }
  std::sort(out.begin(), out.end(),
            [](const TurningPoint& a, const TurningPoint& b) { return a.p < b.p; });
  return out;
}

double area_integral(const ModelParams& params, double E, double a, double b) {
  if (!(b > a)) return 0.0;
  auto m = [&](double P) {
    return std::acos(-std::clamp(x_ratio(params, P, E), -1.0, 1.0));
  };
  const auto pts = breakpoints_in(params, turning_points_scaled(params, E), a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    sum += integrate_turning(m, pts[i], pts[i + 1], kQuad);
  }
  return sum;
}

double period_integral(const ModelParams& params, double E, double a, double b) {
  if (!(b > a)) return 0.0;
  // D as a polynomial in P, highest power first.
  const double ns = params.ns_real();
  const double c0 = 0.5 * params.g * ns * ns - E;
  const double v2 = params.v * params.v;
  const std::vector<double> quartic = {-params.g * params.g / 4.0, -params.g * params.eps,
                                       -(params.eps * params.eps + params.g * c0 + v2),
                                       -2.0 * params.eps * c0, v2 * ns * ns - c0 * c0};
  // Dividing out the endpoint roots leaves a factor that stays positive on
  // the segment, so the square-root singularities are handled exactly by the
  // sin^2 substitution instead of by cancellation in D.
  auto deflate = [](std::vector<double> c, double r) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i] += r * c[i - 1];
    c.pop_back();
    return c;
  };
  auto horner = [](const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (double k : c) acc = acc * x + k;
    return acc;
  };
  const auto tps = turning_points_scaled(params, E);
  auto is_root = [&](double x) {
    return std::any_of(tps.begin(), tps.end(), [&](const TurningPoint& t) { return t.p == x; });
  };
  const auto pts = breakpoints_in(params, tps, a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i];
    const double hi = pts[i + 1];
    if (std::abs(x_ratio(params, 0.5 * (lo + hi), E)) >= 1.0) continue;
    const bool root_lo = is_root(lo);
    const bool root_hi = is_root(hi);
    std::vector<double> rest = quartic;
    if (root_lo) rest = deflate(rest, lo);
    if (root_hi) rest = deflate(rest, hi);
    // Sign that makes the remaining factor positive inside the segment.
    const double sign = root_hi ? -1.0 : 1.0;
    const double w = hi - lo;
    auto f = [&](double theta) {
      const double s = std::sin(theta);
      const double c = std::cos(theta);
      const double P = lo + w * s * s;
      const double R = sign * horner(rest, P);
      if (!(R > 0.0)) return 0.0;
      if (root_lo && root_hi) return 2.0 / std::sqrt(R);
      if (root_lo) return 2.0 * std::sqrt(w) * c / std::sqrt(R);
      if (root_hi) return 2.0 * std::sqrt(w) * s / std::sqrt(R);
      return 2.0 * w * s * c / std::sqrt(R);
    };
    // Close to a separatrix the integrand develops a narrow peak; recursive
    // Gauss-Kronrod bisection finds it where uniform panels would not.
    double err = 0.0;
    const double part = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, std::numbers::pi / 2.0, 15, 1e-10, &err);
    if (!std::isfinite(part) || err > 1e-7 * std::abs(part)) {
      throw ConvergenceError("period quadrature did not converge");
    }
    sum += part;
  }
  return sum;
}

double forbidden_integral(const ModelParams& params, double E, double a, double b) {
  if (!(b > a)) return 0.0;
  auto f = [&](double P) {
    const double X = std::abs(x_ratio(params, P, E));
    return X > 1.0 ? 0.5 * std::acosh(X) : 0.0;
  };
  return integrate_turning(f, a, b, kQuad);
}

}  // namespace detail

EnergyRange classical_range(const ModelParams& params) {
  require_coupling(params);
  const double ns = params.ns_real();
  const double rim_lo = envelope(params, -ns, PotentialBranch::lower);
  const double rim_hi = envelope(params, ns, PotentialBranch::lower);
  EnergyRange r{std::min(rim_lo, rim_hi), std::max(rim_lo, rim_hi)};
  for (const auto& fp : fixed_points(params)) {
    r.min = std::min(r.min, fp.energy);
    r.max = std::max(r.max, fp.energy);
  }
  return r;
}

std::complex<double> q_of_p(const ModelParams& params, double E, double p) {
  require_coupling(params);
  const double P = p / params.hbar;
  if (std::abs(P) >= params.ns_real()) throw DomainError("q(p) is singular at the rim");
  const double X = detail::x_ratio(params, P, E);
  if (X > 1.0) return {0.0, 0.5 * std::acosh(X)};
  if (X < -1.0) return {pi / 2.0, 0.5 * std::acosh(-X)};
  return {0.5 * std::acos(X), 0.0};
}

OrbitGeometry turning_points(const ModelParams& params, double E) {
  require_coupling(params);
  OrbitGeometry geo;
  geo.energy = E;
  const EnergyRange range = classical_range(params);
  const double tol = 1e-9 * energy_scale(params);
  if (E < range.min - tol || E > range.max + tol) {
    geo.diagnostic = "energy outside the classical range";
    return geo;
  }
  const double ns = params.ns_real();
  auto tps = detail::turning_points_scaled(params, E);
  // Orbits through the poles touch the rim; report those contacts as turning points.
  for (double rim : {-ns, ns}) {
    if (std::abs(envelope(params, rim, PotentialBranch::lower) - E) <= tol) {
      const bool have = std::any_of(tps.begin(), tps.end(), [&](const TurningPoint& t) {
        return std::abs(t.p - rim) < 1e-9 * ns;
      });
      if (!have) tps.push_back({rim, PotentialBranch::lower});
    }
  }
  std::sort(tps.begin(), tps.end(),
            [](const TurningPoint& a, const TurningPoint& b) { return a.p < b.p; });

  std::size_t n_lower = 0;
  for (const auto& t : tps) n_lower += t.branch == PotentialBranch::lower ? 1 : 0;
  const std::size_t n_upper = tps.size() - n_lower;

  const auto fps = fixed_points(params);
  const bool two_wells = std::count_if(fps.begin(), fps.end(), [](const FixedPoint& f) {
                           return f.kind == FixedPointKind::minimum;
                         }) == 2;
  if (two_wells) {
    const BarrierInfo info = barrier(params);
    if (E < info.E_min_upper) {
      geo.region = Region::I;
    } else if (E < info.E_barr) {
      geo.region = Region::II;
    } else {
      geo.region = Region::III;
    }
    if (geo.region == Region::II) geo.orbit_class = OrbitClass::double_well_pair;
  }
  if (geo.orbit_class == OrbitClass::none) {
    if (tps.size() == 2 && n_upper == 0) {
      geo.orbit_class = OrbitClass::min_encircling;
    } else if (tps.size() == 2 && n_lower == 0) {
      geo.orbit_class = OrbitClass::max_encircling;
    } else if (!tps.empty()) {
      geo.orbit_class = OrbitClass::rotor;
    }
  }
  for (auto& t : tps) t.p *= params.hbar;
  geo.turning_points = std::move(tps);
  return geo;
}

double action(const ModelParams& params, double E, Lobe lobe) {
  require_coupling(params);
  check_energy(params, E);
  const LobeBounds lb = lobe_bounds(params, E, lobe);
  return params.hbar * detail::area_integral(params, E, lb.lo, lb.hi);
}

double period(const ModelParams& params, double E, Lobe lobe) {
  require_coupling(params);
  check_energy(params, E);
  const EnergyRange range = classical_range(params);
  const double scale = range.max - range.min;
  double dist = std::min(E - range.min, range.max - E);
  // Saddles make T diverge; a local extremum creates or removes a lobe, so
  // S(E) has a kink there. Either way the stencil must not straddle it.
  for (const auto& fp : fixed_points(params)) dist = std::min(dist, std::abs(E - fp.energy));
  if (dist <= 1e-9 * scale) {
    throw DomainError("period is singular at a fixed-point energy or range endpoint");
  }
  double h = std::min(1e-3 * scale, 0.25 * dist);
  const double ns = params.ns_real();
  for (double rim : {-ns, ns}) {
    const double d = std::abs(E - envelope(params, rim, PotentialBranch::lower));
    if (d > 1e-6 * scale) h = std::min(h, 0.25 * d);
  }
  auto central = [&](double step) {
    return (action(params, E + step, lobe) - action(params, E - step, lobe)) / (2.0 * step);
  };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double period_direct(const ModelParams& params, double E, Lobe lobe) {
  require_coupling(params);
  check_energy(params, E);
  const LobeBounds lb = lobe_bounds(params, E, lobe);
  return params.hbar * detail::period_integral(params, E, lb.lo, lb.hi);
}

BarrierInfo barrier(const ModelParams& params) {
  require_coupling(params);
  const auto fps = fixed_points(params);
  std::vector<FixedPoint> minima;
  const FixedPoint* saddle = nullptr;
  for (const auto& fp : fps) {
    if (fp.kind == FixedPointKind::minimum) minima.push_back(fp);
    if (fp.kind == FixedPointKind::saddle) saddle = &fp;
  }
  if (minima.size() != 2 || saddle == nullptr) {
    throw DomainError("no double-well barrier: parameters are not in the self-trapping regime");
  }
  std::sort(minima.begin(), minima.end(),
            [](const FixedPoint& a, const FixedPoint& b) { return a.energy < b.energy; });
  BarrierInfo info;
  info.E_barr = saddle->energy;
  info.p_barr = saddle->point.p;
  info.E_min_lower = minima[0].energy;
  info.E_min_upper = minima[1].energy;
  info.p_min_lower = minima[0].point.p;
  info.p_min_upper = minima[1].point.p;
  return info;
}

TunnelingBelow tunneling_below(const ModelParams& params, double E) {
  const BarrierInfo info = barrier(params);
  if (!(E < info.E_barr)) throw DomainError("tunneling_below needs E below the barrier");
  const WellData w =
      inner_points(detail::turning_points_scaled(params, E), info.p_barr / params.hbar);
  if (!w.has_b || !w.has_c) throw DomainError("no forbidden gap between two wells at this energy");
  TunnelingBelow t;
  t.S_eps = detail::forbidden_integral(params, E, w.b, w.c) / pi;
  t.kappa = std::exp(-pi * t.S_eps);
  return t;
}

TunnelingAbove tunneling_above(const ModelParams& params, double E) {
  const BarrierInfo info = barrier(params);
  if (E < info.E_barr) throw DomainError("tunneling_above needs E above the barrier");
  const double ns = params.ns_real();
  const double P_barr = info.p_barr / params.hbar;
  TunnelingAbove out;

  const auto quartic = turning_quartic(params, E);
  const auto roots = polynomial_roots(quartic);
  const std::complex<double>* best = nullptr;
  for (const auto& z : roots) {
    if (z.imag() <= 1e-12) continue;
    if (best == nullptr || std::abs(z * ns - P_barr) < std::abs(*best * ns - P_barr)) best = &z;
  }
  if (best == nullptr) {
    out.S_eps = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.has_complex_pair = true;
  const std::complex<double> zl = *best * ns;
  const std::complex<double> zr = std::conj(zl);
  out.p_left = zl * params.hbar;
  out.p_right = zr * params.hbar;

  const double av = std::abs(params.v);
  auto k = [&](std::complex<double> z) {
    const std::complex<double> Y =
        params.eps * z + 0.5 * params.g * (ns * ns + z * z) - E;
    return 0.5 * std::acos(Y / (av * std::sqrt(ns * ns - z * z)));
  };
  auto q = [&](std::complex<double> z) { return pi / 2.0 - k(z); };

  const std::complex<double> through = integrate_turning(k, zl, zr, kQuad);
  const std::complex<double> val = std::complex<double>(0.0, 1.0 / pi) * through;
  out.S_eps = -std::abs(val.real());
  const std::complex<double> pb(P_barr, 0.0);
  out.S_theta =
      (integrate_turning(q, zl, pb, kQuad) + integrate_turning(q, zr, pb, kQuad)).real();
  return out;
}

ActionData double_well_data(const ModelParams& params, const BarrierInfo& info, double E,
                            bool include_orbit) {
  const double ns = params.ns_real();
  const double P_barr = info.p_barr / params.hbar;
  const double tol = 1e-9 * energy_scale(params);
  ActionData d;
  double b = P_barr;
  double c = P_barr;
  if (E < info.E_barr - tol) {
    const WellData w = inner_points(detail::turning_points_scaled(params, E), P_barr);
    if (!w.has_b || !w.has_c) {
      throw DomainError("double-well data requested below the upper well minimum");
    }
    b = w.b;
    c = w.c;
    d.S_eps = detail::forbidden_integral(params, E, b, c) / pi;
  } else if (E > info.E_barr + tol) {
    const TunnelingAbove above = tunneling_above(params, E);
    d.S_eps = above.S_eps;
    d.S_theta = above.has_complex_pair ? above.S_theta : 0.0;
  }
  d.S_l = 0.5 * detail::area_integral(params, E, -ns, b);
  d.S_r = 0.5 * detail::area_integral(params, E, c, ns);
  if (include_orbit) {
    d.S = params.hbar * detail::area_integral(params, E, -ns, ns);
    d.T = params.hbar * detail::period_integral(params, E, -ns, ns);
  }
  if (std::isinf(d.S_eps)) {
    d.kappa = std::numeric_limits<double>::infinity();
    d.S_phi = 0.0;
    d.transmission = 0.0;
  } else {
    d.kappa = std::exp(-pi * d.S_eps);
    d.S_phi = phase_correction(d.S_eps);
    if (d.S_eps >= 0.0) {
      d.transmission = 1.0 / std::sqrt(1.0 + d.kappa * d.kappa);
    } else {
      const double e = std::exp(pi * d.S_eps);
      d.transmission = e / std::sqrt(1.0 + e * e);
    }
  }
  return d;
}

std::string_view to_string(PotentialBranch b) {
  return b == PotentialBranch::lower ? "U-" : "U+";
}

std::string_view to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::min_encircling: return "min_encircling";
    case OrbitClass::max_encircling: return "max_encircling";
    case OrbitClass::rotor: return "rotor";
    case OrbitClass::double_well_pair: return "double_well_pair";
    case OrbitClass::none: return "none";
  }
  return "?";
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::single: return "single";
  }
  return "?";
}

}  // namespace bosesemi
