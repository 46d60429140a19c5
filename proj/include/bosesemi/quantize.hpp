#pragma once

#include <string>
#include <vector>

#include "bosesemi/action.hpp"
#include "bosesemi/meanfield.hpp"
#include "bosesemi/params.hpp"

namespace bosesemi {

/// Phase entering the second cosine of the two-well condition above the barrier.
/// `none` keeps it at zero; `integral` uses the S_theta integral of tunneling_above.
enum class AboveBarrierPhase { none, integral };

struct QuantizeOptions {
  AboveBarrierPhase above_barrier = AboveBarrierPhase::none;
  int scan_points_per_level = 8;  // initial grid in regions II/III: this times (N+1)
  int max_refinements = 4;        // grid halvings before a count mismatch is an error
};

struct LevelInfo {
  double energy = 0.0;
  Region region = Region::single;
  OrbitClass orbit_class = OrbitClass::none;
  double residual = 0.0;  // of the quantization condition, in radians
};

struct SemiclassicalSpectrum {
  ModelParams params;
  std::vector<double> energies;  // ascending, N + 1 entries
  std::vector<LevelInfo> levels;
};

/// Root of S(E) = h (n + 1/2) for the whole orbit.
double quantize_single(const ModelParams& params, int n);

/// Levels of regions II and III from the two-well connection formula.
std::vector<LevelInfo> quantize_double(const ModelParams& params,
                                       const QuantizeOptions& options = {});

/// Full spectrum. Parameters with v < 0 or g > 0 are mapped onto v > 0, g <= 0
/// through the exact symmetries of the spectrum.
SemiclassicalSpectrum semiclassical_spectrum(const ModelParams& params,
                                             const QuantizeOptions& options = {});

struct SweepPoint {
  double eps = 0.0;
  std::vector<double> exact;
  std::vector<double> semiclassical;
  std::vector<FixedPoint> stationary;
  bool swallowtail = false;  // four stationary points
  std::string error;         // non-empty if this point failed
};

/// Exact and semiclassical spectra plus stationary energies for each eps.
/// `threads` <= 0 means default_thread_count().
std::vector<SweepPoint> sweep_epsilon(const ModelParams& params, const std::vector<double>& eps_grid,
                                      bool exact = true, bool semiclassical = true,
                                      const QuantizeOptions& options = {}, int threads = 0);

/// BOSESEMI_THREADS if set to a positive integer, else the hardware concurrency.
int default_thread_count();

}  // namespace bosesemi
