#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "bosesemi/params.hpp"
#include "bosesemi/quadrature.hpp"

namespace bosesemi {

enum class PotentialBranch { lower, upper };  // U- or U+

struct TurningPoint {
  double p = 0.0;
  PotentialBranch branch = PotentialBranch::lower;
};

enum class OrbitClass { min_encircling, max_encircling, rotor, double_well_pair, none };

/// I: below the upper well minimum, II: between it and the barrier, III: above
/// the barrier; single when there is only one well.
enum class Region { I, II, III, single };

struct OrbitGeometry {
  double energy = 0.0;
  std::vector<TurningPoint> turning_points;  // ascending in p
  OrbitClass orbit_class = OrbitClass::none;
  Region region = Region::single;
  std::string diagnostic;  // set when the energy is outside the classical range
};

struct BarrierInfo {
  double E_barr = 0.0;
  double p_barr = 0.0;
  double E_min_lower = 0.0;
  double E_min_upper = 0.0;
  double p_min_lower = 0.0;
  double p_min_upper = 0.0;
};

/// Everything the two-well quantization condition needs at one energy. S and T
/// refer to the whole orbit; the phases are dimensionless.
struct ActionData {
  double S = 0.0;
  double T = 0.0;
  double S_l = 0.0;
  double S_r = 0.0;
  double S_eps = 0.0;
  double kappa = 0.0;
  double S_phi = 0.0;
  double S_theta = 0.0;
  /// 1/sqrt(1 + kappa^2), evaluated without overflow; 0 when no tunneling
  /// pair of turning points exists any more.
  double transmission = 0.0;
};

struct TunnelingBelow {
  double S_eps = 0.0;
  double kappa = 1.0;
};

struct TunnelingAbove {
  double S_eps = 0.0;    // <= 0
  double S_theta = 0.0;
  std::complex<double> p_left;   // complex inner turning points, Im > 0 first
  std::complex<double> p_right;
  bool has_complex_pair = false;  // false far above the barrier
};

/// Which part of the phase space an action integral covers. For double-well
/// energies left/right select a lobe bounded by the inner turning point (or by
/// p_barr above the barrier).
enum class Lobe { whole, left, right };

/// Classical energy range [min U-, max U+].
struct EnergyRange {
  double min = 0.0;
  double max = 0.0;
};

EnergyRange classical_range(const ModelParams& params);

/// q(p, E) = arccos(X)/2, continued into the forbidden region with Im q >= 0.
std::complex<double> q_of_p(const ModelParams& params, double E, double p);

OrbitGeometry turning_points(const ModelParams& params, double E);

/// Phase-space area enclosed by H = E (action units, hbar included).
double action(const ModelParams& params, double E, Lobe lobe = Lobe::whole);

/// T = dS/dE by Richardson-extrapolated central differences.
double period(const ModelParams& params, double E, Lobe lobe = Lobe::whole);

/// T from the time integral hbar * int dP / sqrt(D) over the allowed region.
double period_direct(const ModelParams& params, double E, Lobe lobe = Lobe::whole);

/// Saddle and well data; throws DomainError unless there are two wells.
BarrierInfo barrier(const ModelParams& params);

TunnelingBelow tunneling_below(const ModelParams& params, double E);
TunnelingAbove tunneling_above(const ModelParams& params, double E);

/// With include_orbit false the whole-orbit S and T are left at zero.
ActionData double_well_data(const ModelParams& params, const BarrierInfo& info, double E,
                            bool include_orbit = true);

std::string_view to_string(PotentialBranch b);
std::string_view to_string(OrbitClass c);
std::string_view to_string(Region r);

namespace detail {

/// X(P, E) with P = p/hbar; +-1 on the U+-/U- curves.
double x_ratio(const ModelParams& params, double P, double E);

/// D(P, E) = v^2 (Ns^2 - P^2) - Y^2, positive in the allowed region.
double discriminant(const ModelParams& params, double P, double E);

/// Real turning points in P-units, ascending, with their branch.
std::vector<TurningPoint> turning_points_scaled(const ModelParams& params, double E);

/// int_a^b arccos(-clip X) dP (P-units), split at turning points.
double area_integral(const ModelParams& params, double E, double a, double b);

/// int_a^b dP / sqrt(D) over the allowed part of [a, b].
double period_integral(const ModelParams& params, double E, double a, double b);

/// int_a^b |Im q| dP over a forbidden segment.
double forbidden_integral(const ModelParams& params, double E, double a, double b);

}  // namespace detail

}  // namespace bosesemi
