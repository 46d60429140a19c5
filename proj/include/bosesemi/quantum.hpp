#pragma once

#include <optional>
#include <vector>

#include "bosesemi/params.hpp"
#include "bosesemi/tridiagonal.hpp"

namespace bosesemi {

/// N-particle two-mode Hamiltonian in the number basis |n1, N - n1>, n1 = 0..N.
struct TridiagonalHamiltonian {
  std::vector<double> diag;     // N + 1 entries
  std::vector<double> offdiag;  // N entries, couples n1 <-> n1 + 1
  ModelParams params;
  bool symmetrized = true;

  /// Largest absolute matrix element, used as the scale of residual bounds.
  [[nodiscard]] double max_abs_element() const;
};

struct Spectrum {
  ModelParams params;
  std::vector<double> energies;   // ascending, N + 1 entries
  std::optional<Matrix> eigenvectors;
};

enum class WavefunctionKind { exact, primitive, uniform };

/// |Psi_n(p)|^2 on the discrete imbalance grid p = -N, -N+2, ..., N.
struct MomentumWavefunction {
  std::vector<int> grid;
  std::vector<double> values;
  WavefunctionKind kind = WavefunctionKind::exact;
  int state = 0;
  double energy = 0.0;
};

struct LevelDensity {
  std::vector<double> bin_edges;  // num_bins + 1
  std::vector<double> heights;    // per unit energy, integrates to one
  double normalization = 0.0;     // sum(heights * width)

  [[nodiscard]] double bin_width() const { return bin_edges[1] - bin_edges[0]; }
  [[nodiscard]] double bin_center(std::size_t i) const {
    return 0.5 * (bin_edges[i] + bin_edges[i + 1]);
  }
};

/// Matrix elements of eps (n1 - n2) + v (a1^+ a2 + h.c.) + g (n1^2 + n2^2).
/// The symmetrized form replaces n_j by n_j + 1/2 in the interaction, which adds
/// the constant g (N + 1/2) to every diagonal entry.
TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, bool symmetrized = true);

/// All N + 1 eigenvalues in ascending order, eigenvectors on request.
Spectrum diagonalize(const TridiagonalHamiltonian& h, bool want_vectors = false);

/// Convenience: build the symmetrized Hamiltonian and diagonalize it.
Spectrum exact_spectrum(const ModelParams& params, bool want_vectors = false);

/// Population-imbalance distribution of eigenstate n, p = 2 n1 - N.
MomentumWavefunction p_representation(const Spectrum& spec, int n);

/// Equal-width histogram of the spectrum over [E_0, E_N], normalized to unit area.
LevelDensity level_density(const Spectrum& spec, int num_bins);

}  // namespace bosesemi
