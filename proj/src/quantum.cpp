#include "bosesemi/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bosesemi {

double TridiagonalHamiltonian::max_abs_element() const {
  double m = 0.0;
  for (double x : diag) m = std::max(m, std::abs(x));
  for (double x : offdiag) m = std::max(m, std::abs(x));
  return m;
}

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, bool symmetrized) {
  params.validate();
  const int N = params.N;
  TridiagonalHamiltonian h;
  h.params = params;
  h.symmetrized = symmetrized;
  h.diag.resize(static_cast<std::size_t>(N) + 1);
  h.offdiag.resize(static_cast<std::size_t>(N));
  const double shift = symmetrized ? params.g * (N + 0.5) : 0.0;
  for (int n1 = 0; n1 <= N; ++n1) {
    const double a = n1;
    const double b = N - n1;
    h.diag[n1] = params.eps * (a - b) + params.g * (a * a + b * b) + shift;
  }
  for (int n1 = 0; n1 < N; ++n1) {
    h.offdiag[n1] = params.v * std::sqrt((n1 + 1.0) * (N - n1));
  }
  return h;
}

Spectrum diagonalize(const TridiagonalHamiltonian& h, bool want_vectors) {
  auto eig = symmetric_tridiagonal_eigen(h.diag, h.offdiag, want_vectors);
  return Spectrum{h.params, std::move(eig.values), std::move(eig.vectors)};
}

Spectrum exact_spectrum(const ModelParams& params, bool want_vectors) {
  return diagonalize(build_hamiltonian(params, true), want_vectors);
}

MomentumWavefunction p_representation(const Spectrum& spec, int n) {
  if (!spec.eigenvectors) throw DomainError("p_representation needs eigenvectors");
  const int N = spec.params.N;
  if (n < 0 || n > N) throw DomainError("state index out of range: " + std::to_string(n));
  MomentumWavefunction wf;
  wf.kind = WavefunctionKind::exact;
  wf.state = n;
  wf.energy = spec.energies[n];
  auto col = spec.eigenvectors->column(static_cast<std::size_t>(n));
  for (int n1 = 0; n1 <= N; ++n1) {
    wf.grid.push_back(2 * n1 - N);
    wf.values.push_back(col[n1] * col[n1]);
  }
  return wf;
}

LevelDensity level_density(const Spectrum& spec, int num_bins) {
  if (num_bins < 2) throw DomainError("level density needs at least 2 bins");
  const auto& e = spec.energies;
  const double lo = e.front();
  const double hi = e.back();
  if (!(hi > lo)) throw DomainError("degenerate spectrum range, all eigenvalues equal");

  LevelDensity ld;
  const double width = (hi - lo) / num_bins;
  ld.bin_edges.resize(num_bins + 1);
  for (int i = 0; i <= num_bins; ++i) ld.bin_edges[i] = lo + i * width;
  ld.bin_edges.back() = hi;

  std::vector<double> counts(num_bins, 0.0);
  for (double x : e) {
    int k = static_cast<int>(std::floor((x - lo) / width));
    counts[std::clamp(k, 0, num_bins - 1)] += 1.0;
  }
  const double total = static_cast<double>(e.size());
  ld.heights.resize(num_bins);
  double norm = 0.0;
  for (int i = 0; i < num_bins; ++i) {
    ld.heights[i] = counts[i] / (total * width);
    norm += ld.heights[i] * width;
  }
  ld.normalization = norm;
  return ld;
}

}  // namespace bosesemi
