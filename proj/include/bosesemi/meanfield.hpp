#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "bosesemi/params.hpp"

namespace bosesemi {

/// Point of the reduced phase space: angle q in [0, pi) and momentum
/// p = (n1 - n2) hbar with |p| <= Ns hbar.
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

/// Mean-field amplitudes, normalized to |psi1|^2 + |psi2|^2 = Ns.
struct GPEState {
  std::complex<double> psi1;
  std::complex<double> psi2;

  [[nodiscard]] double norm() const { return std::norm(psi1) + std::norm(psi2); }
};

enum class FixedPointKind { maximum, minimum, saddle, degenerate };

/// E+ is the maximum; E- the single minimum below threshold; above threshold the
/// minimum splits into E-+ (p > 0), E-- (p < 0) and the saddle.
enum class FixedPointLabel { e_plus, e_minus, e_minus_plus, e_minus_minus, e_minus_saddle, other };

struct FixedPoint {
  PhasePoint point;
  double energy = 0.0;
  FixedPointKind kind = FixedPointKind::degenerate;
  FixedPointLabel label = FixedPointLabel::other;
};

enum class Regime { subcritical, critical, supercritical };

struct Gradient {
  double dq = 0.0;  // dH/dq = -pdot
  double dp = 0.0;  // dH/dp = qdot
};

struct Hessian {
  double qq = 0.0;
  double qp = 0.0;
  double pp = 0.0;
};

/// Lower and upper envelopes of H over q. For v > 0 these are H(p, pi/2) and H(p, 0).
struct Potentials {
  double lower = 0.0;  // U-
  double upper = 0.0;  // U+
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> points;  // q folded into [0, pi)
  bool hit_rim = false;
};

struct GPETrajectory {
  std::vector<double> times;
  std::vector<GPEState> states;
};

/// H(p, q) = eps p/hbar + v sqrt(Ns^2 - p^2/hbar^2) cos 2q + (g/2)(Ns^2 + p^2/hbar^2).
double hamiltonian(const ModelParams& params, PhasePoint pt);

/// Partial derivatives of H; singular at the rim |p| = Ns hbar.
Gradient gradient(const ModelParams& params, PhasePoint pt);

Hessian hessian(const ModelParams& params, PhasePoint pt);

Potentials potentials(const ModelParams& params, double p);
double potential_lower(const ModelParams& params, double p);
double potential_upper(const ModelParams& params, double p);

/// Stationary points on the q = 0 and q = pi/2 lines, ascending in energy.
std::vector<FixedPoint> fixed_points(const ModelParams& params);

/// Self-trapping threshold |g| = v/Ns (for g < 0).
Regime regime(const ModelParams& params);

/// Fixed-step RK4 integration of the canonical equations; every `sample_every`
/// steps a point is stored. Stops early (hit_rim) if |p| reaches Ns hbar.
Trajectory integrate_trajectory(const ModelParams& params, PhasePoint start, double t_final,
                                double dt, int sample_every = 1);

/// RK4 integration of the two-level nonlinear Schroedinger equation.
GPETrajectory gpe_propagate(const ModelParams& params, const GPEState& state, double t_final,
                            double dt, int sample_every = 1);

/// Amplitude-phase reduction: p = (|psi1|^2 - |psi2|^2) hbar,
/// q = (arg psi2 - arg psi1)/2 folded into [0, pi).
PhasePoint to_phase_point(const ModelParams& params, const GPEState& state);

/// Inverse of to_phase_point with psi1 = sqrt((Ns + p)/2) e^{-iq}, psi2 = sqrt((Ns - p)/2) e^{iq}.
GPEState from_phase_point(const ModelParams& params, PhasePoint pt);

double fold_angle(double q);

std::string_view to_string(FixedPointKind kind);
std::string_view to_string(FixedPointLabel label);
std::string_view to_string(Regime r);

}  // namespace bosesemi
