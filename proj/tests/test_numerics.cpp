#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "bosesemi/polynomial.hpp"
#include "bosesemi/quadrature.hpp"
#include "bosesemi/special.hpp"
#include "oracles.hpp"

using namespace bosesemi;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

// Coefficients of prod (x - r_i), highest power first.
std::vector<double> from_roots(const std::vector<cd>& roots) {
  std::vector<cd> c{1.0};
  for (const cd& r : roots) {
    std::vector<cd> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = next;
  }
  std::vector<double> out;
  for (const cd& z : c) out.push_back(z.real());
  return out;
}

double match_error(std::vector<cd> got, std::vector<cd> want) {
  double worst = 0.0;
  for (const cd& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](cd a, cd b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST_CASE("quartic roots from known factors") {
  const std::vector<std::vector<cd>> cases = {
      {1.0, -2.0, 0.5, 3.0},
      {cd(0.3, 0.7), cd(0.3, -0.7), -1.2, 0.9},
      {cd(-0.5, 1.0), cd(-0.5, -1.0), cd(2.0, 0.1), cd(2.0, -0.1)},
      {0.25, 0.25, -0.75, 0.6},
      {0.0, 0.0, 1.0, -1.0},
  };
  for (const auto& roots : cases) {
    const auto coeffs = from_roots(roots);
    CHECK(match_error(polynomial_roots(coeffs), roots) < 1e-7);
  }
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<cd> roots = {u(rng), u(rng), cd(u(rng), u(rng))};
    roots.push_back(std::conj(roots[2]));
    const auto coeffs = from_roots(roots);
    CHECK(match_error(polynomial_roots(coeffs), roots) < 1e-6);
  }
}

TEST_CASE("lower-degree polynomials and real root filtering") {
  CHECK(match_error(polynomial_roots(std::vector<double>{0.0, 2.0, -6.0, 4.0}), {1.0, 2.0}) < 1e-12);
  CHECK(match_error(polynomial_roots(std::vector<double>{1.0, -6.0, 11.0, -6.0}), {1.0, 2.0, 3.0}) < 1e-10);
  const auto real = real_roots_in(from_roots({-3.0, 2.5, cd(0.1, 2.0), cd(0.1, -2.0)}), -1.0, 1.0);
  CHECK(real.empty());
  const auto coeffs = from_roots({-3.0, -0.5, 0.4, 2.5});
  const auto in = real_roots_in(coeffs, -1.0, 1.0);
  REQUIRE(in.size() == 2);
  CHECK(in[0] == doctest::Approx(-0.5));
  CHECK(in[1] == doctest::Approx(0.4));
}

TEST_CASE("Gauss-Legendre rules integrate polynomials of degree 2n-1 exactly") {
  for (int n : {2, 5, 16, 64}) {
    const GaussRule& r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("turning-point quadrature handles square-root endpoints") {
  const double a = -1.3, b = 2.1;
  const double half_disc =
      integrate_turning([&](double x) { return std::sqrt(std::max(0.0, (x - a) * (b - x))); }, a, b);
  CHECK(half_disc == doctest::Approx(pi * (b - a) * (b - a) / 8.0).epsilon(1e-12));
  const double inv =
      integrate_turning([&](double x) { return 1.0 / std::sqrt((x - a) * (b - x)); }, a, b);
  CHECK(inv == doctest::Approx(pi).epsilon(1e-11));
  // Complex straight contour: int_{-i}^{i} z^2 dz = -2i/3
  const cd z = integrate_turning([](cd x) { return x * x; }, cd(0, -1), cd(0, 1));
  CHECK(std::abs(z - cd(0, -2.0 / 3.0)) < 1e-13);
}

TEST_CASE("arg Gamma(1/2 + ix) matches a 50-digit Stirling oracle") {
  for (double x : {0.01, 0.1, 0.5, 1.0, 5.0, 10.0}) {
    CHECK(std::abs(arg_gamma_half(x) - oracle::arg_gamma_half(x)) < 1e-10);
    CHECK(std::abs(arg_gamma_half(-x) + oracle::arg_gamma_half(x)) < 1e-10);
  }
}

TEST_CASE("complex log Gamma: real axis and recurrence") {
  for (double x : {0.3, 1.0, 2.5, 7.0}) {
    CHECK(log_gamma(cd(x, 0)).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  const cd z(0.7, 2.3);
  CHECK(std::abs(std::exp(log_gamma(z + 1.0) - log_gamma(z)) - z) < 1e-12);
}

TEST_CASE("phase correction S_phi") {
  CHECK(phase_correction(0.0) == 0.0);
  CHECK(std::abs(phase_correction(10.0)) < 0.01);
  // Stirling: arg Gamma(1/2 + ix) ~ x ln x - x, so S_phi decays like 1/x.
  CHECK(std::abs(phase_correction(100.0)) < std::abs(phase_correction(10.0)));
  CHECK(phase_correction(-0.5) == doctest::Approx(-phase_correction(0.5)));
  CHECK(phase_correction(0.5) ==
        doctest::Approx(oracle::arg_gamma_half(0.5) - 0.5 * std::log(0.5) + 0.5).epsilon(1e-12));
}

TEST_CASE("Hermite polynomials") {
  CHECK(hermite(0, 0.37) == 1.0);
  CHECK(hermite(1, 0.37) == doctest::Approx(0.74));
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0));
  CHECK(hermite(10, 0.3) == doctest::Approx(oracle::hermite(10, 0.3)).epsilon(1e-13));
  CHECK(hermite(25, 2.2) == doctest::Approx(oracle::hermite(25, 2.2)).epsilon(1e-12));
  CHECK_THROWS_AS(hermite(-1, 0.0), DomainError);
}
