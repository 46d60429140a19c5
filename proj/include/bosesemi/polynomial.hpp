#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bosesemi {

/// Roots of a real polynomial of degree <= 4, coefficients from the highest
/// power down. Leading coefficients that vanish relative to the largest one
/// lower the degree. Closed-form (Ferrari / Cardano) solution in complex
/// arithmetic, each root polished by Newton steps on the original polynomial.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

/// Real roots (|Im| <= imag_tol * (1 + |Re|)) inside [lo, hi], ascending.
std::vector<double> real_roots_in(std::span<const double> coeffs, double lo, double hi,
                                  double imag_tol = 1e-7);

std::complex<double> polyval(std::span<const double> coeffs, std::complex<double> x);

}  // namespace bosesemi
