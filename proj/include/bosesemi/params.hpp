#pragma once

#include <stdexcept>
#include <string>

namespace bosesemi {

/// Raised when an argument lies outside the domain of an operation
/// (|p| beyond the phase-space rim, N < 1, hbar <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative procedure (eigensolver, quadrature, root scan)
/// fails to meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical parameters shared by the many-particle and the mean-field side.
///
/// Energies are in units where eps, v and g carry the same dimension; the
/// momentum-like variable p is measured in units of hbar.
struct ModelParams {
  int N = 1;          ///< particle number
  double eps = 0.0;   ///< onsite bias, mode energies are +-eps
  double v = 1.0;     ///< coupling between the modes
  double g = 0.0;     ///< onsite interaction
  double hbar = 1.0;

  /// Symmetrized norm N + 1 of the mean-field amplitudes.
  [[nodiscard]] int ns() const noexcept { return N + 1; }
  [[nodiscard]] double ns_real() const noexcept { return static_cast<double>(N) + 1.0; }

  /// Throws DomainError for N < 1, hbar <= 0 or non-finite values.
  void validate() const;

  /// True inside the regime the semiclassical analysis was built for
  /// (v > 0, g <= 0). Other signs are accepted but flagged.
  [[nodiscard]] bool in_validated_regime() const noexcept { return v > 0.0 && g <= 0.0; }

  /// Construct with g given in units of 1/Ns, the convention of all figure captions.
  static ModelParams with_g_over_ns(int N, double eps, double v, double g_over_ns,
                                    double hbar = 1.0);

  [[nodiscard]] std::string describe() const;
};

}  // namespace bosesemi
