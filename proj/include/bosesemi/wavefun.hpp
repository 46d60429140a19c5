#pragma once

#include <optional>
#include <vector>

#include "bosesemi/action.hpp"
#include "bosesemi/params.hpp"
#include "bosesemi/quantum.hpp"

namespace bosesemi {

/// The uniform approximation is only available for orbits whose two turning
/// points both lie on U-.
class UnsupportedGeometry : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Classically allowed interval of an orbit (physical momenta) and the
/// potential curves its ends lie on.
struct AllowedInterval {
  double lo = 0.0;
  double hi = 0.0;
  PotentialBranch lo_branch = PotentialBranch::lower;
  PotentialBranch hi_branch = PotentialBranch::lower;
};

/// All allowed intervals at energy E, ascending.
std::vector<AllowedInterval> allowed_intervals(const ModelParams& params, double E);

/// w(p) = 1 / (T sqrt(D)), T the period of the orbit through p; integrates to 1
/// over the allowed region. Throws DomainError outside it.
double classical_density(const ModelParams& params, double E, double p);

/// Phase accumulated from the left end p- of the allowed interval containing p:
/// int (pi/2 - q) dp if p- lies on U-, int q dp if it lies on U+.
double action_phase(const ModelParams& params, double E, double p);

/// Forbidden-region value 1/2 |w(p)| exp(-2 |Im S(p)|/hbar), with Im S taken
/// from the nearest turning point so that it always decays.
double tail(const ModelParams& params, double E, double p);

/// Primitive two-path form 2 w cos^2(S/hbar - pi/4), tails outside, normalized
/// on the grid. E defaults to the semiclassical level n.
MomentumWavefunction primitive(const ModelParams& params, int n,
                               std::optional<double> energy = std::nullopt);

/// Harmonic-oscillator mapping: |w sqrt(2n+1 - xi^2)| H_n(xi)^2 exp(-xi^2),
/// normalized on the grid. Throws UnsupportedGeometry unless both turning points
/// are on U-.
MomentumWavefunction uniform(const ModelParams& params, int n,
                             std::optional<double> energy = std::nullopt);

/// Solves xi sqrt(xi0^2 - xi^2)/2 + xi0^2 (pi/2 + asin(xi/xi0))/2 = S for xi in
/// [-xi0, xi0], xi0 = sqrt(2n+1).
double xi_from_phase(int n, double S);

/// Solves xi sqrt(xi^2 - xi0^2)/2 - xi0^2 log((xi + sqrt(xi^2 - xi0^2))/xi0)/2 = I
/// for xi >= xi0 (forbidden side, I >= 0).
double xi_from_forbidden_phase(int n, double I);

/// The mapping variable at momentum p for state n at energy E.
double xi_of_p(const ModelParams& params, int n, double E, double p);

}  // namespace bosesemi
