#include "bosesemi/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bosesemi {

using cplx = std::complex<double>;

namespace {

std::vector<cplx> solve_quadratic(cplx a, cplx b, cplx c) {
  const cplx disc = std::sqrt(b * b - 4.0 * a * c);
  // Avoid cancellation: pick the sign that makes |b + sign*disc| large.
  const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
  if (std::abs(q) == 0.0) return {cplx{0.0}, cplx{0.0}};
  return {q / a, c / q};
}

std::vector<cplx> solve_cubic_monic(cplx b, cplx c, cplx d) {
  // x = t - b/3 ; t^3 + p t + q = 0
  const cplx p = c - b * b / 3.0;
  const cplx q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const cplx shift = -b / 3.0;
  const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  cplx u3 = -q / 2.0 + disc;
  if (std::abs(-q / 2.0 - disc) > std::abs(u3)) u3 = -q / 2.0 - disc;
  std::vector<cplx> roots;
  if (std::abs(u3) == 0.0) {
    // p == q == 0: triple root
    return {shift, shift, shift};
  }
  const cplx u = std::pow(u3, 1.0 / 3.0);
  const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  cplx uk = u;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(uk - p / (3.0 * uk) + shift);
    uk *= omega;
  }
  return roots;
}

std::vector<cplx> solve_quartic_monic(double b, double c, double d, double e) {
  // x = y - b/4 ; y^4 + p y^2 + q y + r = 0
  const double b2 = b * b;
  const double p = c - 3.0 * b2 / 8.0;
  const double q = d - b * c / 2.0 + b2 * b / 8.0;
  const double r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;
  const double shift = -b / 4.0;
  std::vector<cplx> ys;
  const double scale = std::max({std::abs(p), std::sqrt(std::abs(r)), 1e-300});
  if (std::abs(q) <= 1e-14 * scale * std::sqrt(scale)) {
    // biquadratic
    for (cplx z : solve_quadratic(1.0, p, r)) {
      const cplx s = std::sqrt(z);
      ys.push_back(s);
      ys.push_back(-s);
    }
  } else {
    // resolvent cubic 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0
    auto ms = solve_cubic_monic(p, (p * p / 4.0 - r), -q * q / 8.0);
    cplx m = *std::max_element(ms.begin(), ms.end(),
                               [](cplx a, cplx bb) { return std::abs(a) < std::abs(bb); });
    const cplx s = std::sqrt(2.0 * m);
    const cplx t = q / (2.0 * s);
    for (cplx z : solve_quadratic(1.0, s, p / 2.0 + m - t)) ys.push_back(z);
    for (cplx z : solve_quadratic(1.0, -s, p / 2.0 + m + t)) ys.push_back(z);
  }
  for (cplx& y : ys) y += shift;
  return ys;
}

cplx polish(std::span<const double> coeffs, cplx x) {
  for (int it = 0; it < 8; ++it) {
    cplx f = 0.0;
    cplx df = 0.0;
    for (double a : coeffs) {
      df = df * x + f;
      f = f * x + a;
    }
    if (std::abs(df) == 0.0) break;
    const cplx next = x - f / df;
    if (std::abs(polyval(coeffs, next)) >= std::abs(f)) break;
    x = next;
  }
  return x;
}

}  // namespace

cplx polyval(std::span<const double> coeffs, cplx x) {
  cplx f = 0.0;
  for (double a : coeffs) f = f * x + a;
  return f;
}

std::vector<cplx> polynomial_roots(std::span<const double> coeffs) {
  double cmax = 0.0;
  for (double a : coeffs) cmax = std::max(cmax, std::abs(a));
  if (cmax == 0.0) return {};
  std::size_t first = 0;
  while (first < coeffs.size() && std::abs(coeffs[first]) <= 1e-14 * cmax) ++first;
  const auto trimmed = coeffs.subspan(first);
  const std::size_t degree = trimmed.size() - 1;

  std::vector<cplx> roots;
  const double a0 = trimmed[0];
  switch (degree) {
    case 0:
      return {};
    case 1:
      roots.push_back(-trimmed[1] / a0);
      break;
    case 2:
      roots = solve_quadratic(a0, trimmed[1], trimmed[2]);
      break;
    case 3:
      roots = solve_cubic_monic(trimmed[1] / a0, trimmed[2] / a0, trimmed[3] / a0);
      break;
    case 4:
      roots = solve_quartic_monic(trimmed[1] / a0, trimmed[2] / a0, trimmed[3] / a0,
                                  trimmed[4] / a0);
      break;
    default:
      throw std::invalid_argument("polynomial_roots supports degree <= 4");
  }
  for (cplx& r : roots) r = polish(trimmed, r);
  return roots;
}

std::vector<double> real_roots_in(std::span<const double> coeffs, double lo, double hi,
                                  double imag_tol) {
  std::vector<double> out;
  for (cplx r : polynomial_roots(coeffs)) {
    if (std::abs(r.imag()) <= imag_tol * (1.0 + std::abs(r.real())) && r.real() >= lo &&
        r.real() <= hi) {
      out.push_back(r.real());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bosesemi
