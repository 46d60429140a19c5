#pragma once

#include <complex>

namespace bosesemi {

/// Principal-branch-continuous log Gamma(z) for complex z, Lanczos approximation
/// (g = 7, 9 coefficients) with reflection for Re z < 1/2.
std::complex<double> log_gamma(std::complex<double> z);

/// arg Gamma(1/2 + i x), taken continuously in x (Im log Gamma, not wrapped).
double arg_gamma_half(double x);

/// Gamma-function phase of the two-well connection formula,
/// arg Gamma(1/2 + i s) - s log|s| + s, with the s -> 0 limit equal to 0.
double phase_correction(double s_eps);

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

}  // namespace bosesemi
