#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bosesemi/params.hpp"

namespace bosesemi {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; computed once per n and cached.
const GaussRule& gauss_legendre(int n);

/// Composite Gauss-Legendre: `panels` equal panels of `rule` on [a, b].
template <class F, class T = double>
auto integrate_composite(F&& f, T a, T b, int panels, const GaussRule& rule) {
  using R = decltype(f(a));
  R sum{};
  const T h = (b - a) / static_cast<double>(panels);
  for (int k = 0; k < panels; ++k) {
    const T lo = a + h * static_cast<double>(k);
    const T mid = lo + 0.5 * h;
    R part{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      part += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    sum += part * (0.5 * h);
  }
  return sum;
}

struct QuadratureOptions {
  int nodes = 64;          // points per panel
  double rel_tol = 1e-11;  // stop when doubling changes the result by less
  double abs_tol = 1e-14;
  int max_panels = 512;
};

/// Composite Gauss-Legendre on [a, b] for a smooth integrand, doubling the
/// panel count until two successive results agree.
///
/// Throws ConvergenceError if max_panels is reached without meeting tolerance.
template <class F>
auto integrate_smooth(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  const GaussRule& rule = gauss_legendre(opt.nodes);
  auto prev = integrate_composite(f, a, b, 1, rule);
  for (int panels = 2; panels <= opt.max_panels; panels *= 2) {
    auto cur = integrate_composite(f, a, b, panels, rule);
    const double diff = std::abs(cur - prev);
    if (diff <= opt.rel_tol * std::abs(cur) || diff <= opt.abs_tol) return cur;
    prev = cur;
  }
  throw ConvergenceError("quadrature did not converge");
}

/// Integral of f over [a, b] when f has square-root behaviour at one or both
/// endpoints (turning points). The map p = a + (b - a) sin^2(theta) turns such
/// integrands into smooth functions of theta. Works for real or complex
/// endpoints (straight contour).
template <class F, class T = double>
auto integrate_turning(F&& f, T a, T b, const QuadratureOptions& opt = {}) {
  const T span = b - a;
  auto g = [&](double theta) {
    const double s = std::sin(theta);
    return f(a + span * (s * s)) * (span * std::sin(2.0 * theta));
  };
  return integrate_smooth(g, 0.0, std::numbers::pi / 2.0, opt);
}

}  // namespace bosesemi
