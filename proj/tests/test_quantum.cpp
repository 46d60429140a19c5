#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bosesemi/quantum.hpp"
#include "bosesemi/tridiagonal.hpp"
#include "oracles.hpp"

using namespace bosesemi;

TEST_CASE("tridiagonal eigenvalues agree with dense Jacobi for N <= 8") {
  for (int N = 1; N <= 8; ++N) {
    for (double eps : {-0.7, 0.0, 0.45}) {
      for (double v : {-1.0, 0.3, 1.0}) {
        for (double g : {-0.5, 0.0, 0.2}) {
          for (bool sym : {false, true}) {
            const ModelParams p{N, eps, v, g, 1.0};
            const auto got = diagonalize(build_hamiltonian(p, sym)).energies;
            const auto want = oracle::jacobi_eigenvalues(oracle::dense_hamiltonian(N, eps, v, g, sym));
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
          }
        }
      }
    }
  }
}

TEST_CASE("eigenvectors are orthonormal and satisfy H x = E x") {
  const auto p = ModelParams::with_g_over_ns(12, 0.4, 1.0, -2.0);
  const auto h = build_hamiltonian(p);
  const auto spec = diagonalize(h, true);
  const Matrix& V = *spec.eigenvectors;
  const std::size_t n = V.size();
  const double scale = h.max_abs_element();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += V(k, a) * V(k, b);
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
    for (std::size_t k = 0; k < n; ++k) {
      double hx = h.diag[k] * V(k, a);
      if (k > 0) hx += h.offdiag[k - 1] * V(k - 1, a);
      if (k + 1 < n) hx += h.offdiag[k] * V(k + 1, a);
      CHECK(std::abs(hx - spec.energies[a] * V(k, a)) < 1e-12 * scale);
    }
  }
}

TEST_CASE("g = 0 spectrum is the linear ladder sqrt(eps^2 + v^2)(2n - N)") {
  for (int N : {1, 4, 15}) {
    const ModelParams p{N, 0.7, 1.3, 0.0, 1.0};
    const auto e = exact_spectrum(p).energies;
    const double w = std::sqrt(0.49 + 1.69);
    for (int n = 0; n <= N; ++n) CHECK(e[n] == doctest::Approx(w * (2 * n - N)).epsilon(1e-12));
  }
}

TEST_CASE("spectral symmetries: eps -> -eps, v -> -v, and (eps, g) -> -(-eps, -g)") {
  for (int N : {5, 10, 20}) {
    const auto base = ModelParams::with_g_over_ns(N, 0.8, 1.0, -3.0);
    const auto e0 = exact_spectrum(base).energies;
    auto mirrored = base;
    mirrored.eps = -base.eps;
    auto flipped_v = base;
    flipped_v.v = -base.v;
    auto negated = base;
    negated.eps = -base.eps;
    negated.g = -base.g;
    const auto e1 = exact_spectrum(mirrored).energies;
    const auto e2 = exact_spectrum(flipped_v).energies;
    const auto e3 = exact_spectrum(negated).energies;
    for (std::size_t i = 0; i < e0.size(); ++i) {
      CHECK(std::abs(e0[i] - e1[i]) < 1e-9);
      CHECK(std::abs(e0[i] - e2[i]) < 1e-9);
      CHECK(std::abs(e0[i] + e3[e0.size() - 1 - i]) < 1e-9);
    }
  }
}

TEST_CASE("symmetrization shifts every level by g (N + 1/2)") {
  const auto p = ModelParams::with_g_over_ns(9, 0.3, 1.0, -1.5);
  const auto a = diagonalize(build_hamiltonian(p, false)).energies;
  const auto b = diagonalize(build_hamiltonian(p, true)).energies;
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] - a[i] == doctest::Approx(p.g * 9.5));
}

TEST_CASE("p-representation: unit norm, parity grid, non-negative") {
  for (int N : {6, 7, 14}) {
    const auto p = ModelParams::with_g_over_ns(N, 0.6, 1.0, -0.6);
    const auto spec = exact_spectrum(p, true);
    for (int n = 0; n <= N; ++n) {
      const auto wf = p_representation(spec, n);
      CHECK(wf.grid.front() == -N);
      CHECK(wf.grid.back() == N);
      for (std::size_t i = 0; i < wf.grid.size(); ++i) {
        CHECK(((wf.grid[i] - N) % 2) == 0);
        CHECK(wf.values[i] >= 0.0);
      }
      CHECK(std::abs(std::accumulate(wf.values.begin(), wf.values.end(), 0.0) - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(p_representation(exact_spectrum(ModelParams{3, 0, 1, 0, 1}), 0), DomainError);
}

TEST_CASE("level density histogram integrates to one") {
  const auto spec = exact_spectrum(ModelParams::with_g_over_ns(200, 1.0, 1.0, -3.0));
  const auto ld = level_density(spec, 40);
  double total = 0.0;
  for (double h : ld.heights) total += h * ld.bin_width();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ld.bin_edges.front() == spec.energies.front());
  CHECK(ld.bin_edges.back() == doctest::Approx(spec.energies.back()));
  CHECK_THROWS_AS(level_density(spec, 1), DomainError);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(exact_spectrum(ModelParams{0, 0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(exact_spectrum(ModelParams{3, 0, 1, 0, -1}), DomainError);
  CHECK_THROWS_AS(exact_spectrum(ModelParams{3, NAN, 1, 0, 1}), DomainError);
}
