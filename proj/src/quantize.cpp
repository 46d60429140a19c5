#include "bosesemi/quantize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <boost/math/tools/toms748_solve.hpp>

#include "bosesemi/quantum.hpp"

namespace bosesemi {

using std::numbers::pi;

namespace {

constexpr double kTwoPi = 2.0 * pi;

// Bracketed root of a monotone function; f(lo) and f(hi) must differ in sign.
template <class F>
double solve_bracketed(F&& f, double lo, double hi, double flo, double fhi) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  std::uintmax_t iters = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(50);
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (r.first + r.second);
}

// Energies where a monotone increasing `phase` crosses target(k) for consecutive k.
template <class Phase>
std::vector<std::pair<double, double>> monotone_roots(Phase&& phase, double lo, double hi,
                                                      double offset, double period) {
  const double plo = phase(lo);
  const double phi = phase(hi);
  std::vector<std::pair<double, double>> out;
  const auto k0 = static_cast<long>(std::floor((plo - offset) / period)) + 1;
  for (long k = k0;; ++k) {
    const double target = offset + period * static_cast<double>(k);
    if (target > phi) break;
    auto f = [&](double E) { return phase(E) - target; };
    const double E = solve_bracketed(f, lo, hi, plo - target, phi - target);
    out.emplace_back(E, std::abs(phase(E) - target));
  }
  return out;
}

double whole_area(const ModelParams& params, double E) {
  const double ns = params.ns_real();
  return detail::area_integral(params, E, -ns, ns);
}

struct BranchValues {
  double plus;
  double minus;
};

// G(E) = A -/+ arccos(-c cos B) for the two branches of the connection formula
// sqrt(1 + kappa^2) cos A = -cos B, A = S_l + S_r + S_phi, B = S_l - S_r + S_theta.
BranchValues branch_phases(const ModelParams& params, const BarrierInfo& info, double E,
                           AboveBarrierPhase mode) {
  const ActionData d = double_well_data(params, info, E, false);
  const double A = d.S_l + d.S_r + d.S_phi;
  const double theta = mode == AboveBarrierPhase::integral ? d.S_theta : 0.0;
  const double B = d.S_l - d.S_r + theta;
  const double w = std::acos(std::clamp(-d.transmission * std::cos(B), -1.0, 1.0));
  return {A - w, A + w};
}

Region region_of(const std::optional<BarrierInfo>& info, double E) {
  if (!info) return Region::single;
  if (E < info->E_min_upper) return Region::I;
  if (E < info->E_barr) return Region::II;
  return Region::III;
}

std::optional<BarrierInfo> try_barrier(const ModelParams& params) {
  if (regime(params) != Regime::supercritical) return std::nullopt;
  try {
    return barrier(params);
  } catch (const DomainError&) {
    return std::nullopt;  // outside the swallowtail: a single well
  }
}

std::vector<LevelInfo> double_well_levels(const ModelParams& params, const BarrierInfo& info,
                                          const EnergyRange& range, int scan_points,
                                          AboveBarrierPhase mode) {
  const double scale = range.max - range.min;
  const double lo = info.E_min_upper + 1e-12 * scale;
  const double hi = range.max - 1e-11 * scale;
  std::vector<LevelInfo> out;
  if (!(hi > lo)) return out;

  std::vector<double> grid(static_cast<std::size_t>(scan_points) + 1);
  std::vector<BranchValues> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(scan_points);
    vals[i] = branch_phases(params, info, grid[i], mode);
  }
  for (int sign : {+1, -1}) {
    auto G = [&](double E) {
      const BranchValues b = branch_phases(params, info, E, mode);
      return sign > 0 ? b.plus : b.minus;
    };
    auto at = [&](std::size_t i) { return sign > 0 ? vals[i].plus : vals[i].minus; };
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double g0 = at(i);
      const double g1 = at(i + 1);
      // Multiples of 2 pi in (g0, g1]; the branch functions increase with E.
      const auto k0 = static_cast<long>(std::floor(std::min(g0, g1) / kTwoPi)) + 1;
      for (long k = k0; kTwoPi * static_cast<double>(k) <= std::max(g0, g1); ++k) {
        const double target = kTwoPi * static_cast<double>(k);
        auto f = [&](double E) { return G(E) - target; };
        const double E = solve_bracketed(f, grid[i], grid[i + 1], g0 - target, g1 - target);
        out.push_back({E, region_of(info, E), OrbitClass::none, std::abs(G(E) - target)});
      }
    }
  }
  return out;
}

// The one-lobe condition below E_u lacks the phase S_phi that the two-well
// condition carries above it, so a level sitting at the seam can be missed or
// found on both sides. A missing one is recovered by continuing the lower-lobe
// condition above E_u; a duplicate is dropped from the two-well side.
void reconcile_seam(const ModelParams& params, const BarrierInfo& info,
                    std::vector<LevelInfo>& lower, std::vector<LevelInfo>& upper) {
  const int expected = params.N + 1;
  const int found = static_cast<int>(lower.size() + upper.size());
  const Lobe lobe = info.p_min_lower < info.p_barr ? Lobe::left : Lobe::right;
  const double seam_hi = upper.empty() ? info.E_barr : std::min(info.E_barr, upper.front().energy);
  if (found == expected - 1) {
    const double target = kTwoPi * (static_cast<double>(lower.size()) + 0.5);
    auto f = [&](double E) { return action(params, E, lobe) / params.hbar - target; };
    const double flo = f(info.E_min_upper);
    const double fhi = f(seam_hi);
    if (flo <= 0.0 && fhi >= 0.0) {
      const double E = solve_bracketed(f, info.E_min_upper, seam_hi, flo, fhi);
      lower.push_back({E, Region::II, OrbitClass::none, std::abs(f(E))});
    }
  } else if (found == expected + 1 && !lower.empty() && !upper.empty()) {
    const double E_top = lower.back().energy;
    const double gap_next = upper.size() > 1 ? upper[1].energy - upper[0].energy : info.E_barr;
    if (upper.front().energy - E_top < gap_next) upper.erase(upper.begin());
  }
}

// Regions I plus II/III for a double well, or plain Bohr-Sommerfeld otherwise.
std::vector<LevelInfo> assemble(const ModelParams& params, int scan_points,
                                const QuantizeOptions& options) {
  const EnergyRange range = classical_range(params);
  const auto info = try_barrier(params);
  std::vector<LevelInfo> levels;
  auto area = [&](double E) { return whole_area(params, E); };
  if (!info) {
    for (const auto& [E, res] : monotone_roots(area, range.min, range.max, pi, kTwoPi)) {
      levels.push_back({E, Region::single, OrbitClass::none, res});
    }
    return levels;
  }
  // Below the upper minimum only the lower lobe is accessible.
  const double scale = range.max - range.min;
  for (const auto& [E, res] :
       monotone_roots(area, range.min, info->E_min_upper, pi, kTwoPi)) {
    if (E < range.min + 1e-14 * scale) continue;
    levels.push_back({E, Region::I, OrbitClass::min_encircling, res});
  }
  auto upper = double_well_levels(params, *info, range, scan_points, options.above_barrier);
  std::sort(upper.begin(), upper.end(),
            [](const LevelInfo& a, const LevelInfo& b) { return a.energy < b.energy; });
  reconcile_seam(params, *info, levels, upper);
  levels.insert(levels.end(), upper.begin(), upper.end());
  return levels;
}

void attach_orbit_classes(const ModelParams& params, std::vector<LevelInfo>& levels) {
  for (auto& lv : levels) {
    const OrbitGeometry geo = turning_points(params, lv.energy);
    lv.orbit_class = geo.orbit_class;
    lv.region = geo.region;
  }
}

SemiclassicalSpectrum spectrum_validated(const ModelParams& params,
                                         const QuantizeOptions& options) {
  const int expected = params.N + 1;
  int scan = std::max(2, options.scan_points_per_level) * expected;
  std::vector<LevelInfo> levels;
  for (int attempt = 0; attempt <= options.max_refinements; ++attempt) {
    levels = assemble(params, scan, options);
    if (static_cast<int>(levels.size()) == expected) break;
    scan *= 2;
  }
  if (static_cast<int>(levels.size()) != expected) {
    std::ostringstream os;
    int counts[4] = {0, 0, 0, 0};
    for (const auto& lv : levels) ++counts[static_cast<int>(lv.region)];
    os << "semiclassical level count " << levels.size() << " != " << expected
       << " (I: " << counts[0] << ", II: " << counts[1] << ", III: " << counts[2]
       << ", single: " << counts[3] << ") for " << params.describe();
    throw ConvergenceError(os.str());
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const LevelInfo& a, const LevelInfo& b) { return a.energy < b.energy; });
  attach_orbit_classes(params, levels);
  SemiclassicalSpectrum out;
  out.params = params;
  out.levels = std::move(levels);
  for (const auto& lv : out.levels) out.energies.push_back(lv.energy);
  return out;
}

}  // namespace

double quantize_single(const ModelParams& params, int n) {
  params.validate();
  if (n < 0 || n > params.N) throw DomainError("level index outside 0..N");
  const EnergyRange range = classical_range(params);
  const double target = kTwoPi * (n + 0.5);
  auto f = [&](double E) { return whole_area(params, E) - target; };
  const double flo = f(range.min);
  const double fhi = f(range.max);
  if (flo > 0.0 || fhi < 0.0) {
    throw ConvergenceError("Bohr-Sommerfeld bracket failed: action is not monotone");
  }
  return solve_bracketed(f, range.min, range.max, flo, fhi);
}

std::vector<LevelInfo> quantize_double(const ModelParams& params, const QuantizeOptions& options) {
  params.validate();
  const BarrierInfo info = barrier(params);
  const EnergyRange range = classical_range(params);
  const int scan = std::max(2, options.scan_points_per_level) * (params.N + 1);
  auto levels = double_well_levels(params, info, range, scan, options.above_barrier);
  std::stable_sort(levels.begin(), levels.end(),
                   [](const LevelInfo& a, const LevelInfo& b) { return a.energy < b.energy; });
  attach_orbit_classes(params, levels);
  return levels;
}

SemiclassicalSpectrum semiclassical_spectrum(const ModelParams& params,
                                             const QuantizeOptions& options) {
  params.validate();
  if (params.v == 0.0) throw DomainError("semiclassical spectrum needs a nonzero coupling v");
  ModelParams work = params;
  work.v = std::abs(params.v);
  if (work.g <= 0.0) {
    auto out = spectrum_validated(work, options);
    out.params = params;
    return out;
  }
  // H(eps, v, g) = -H(-eps, v, -g) up to a basis relabelling.
  work.eps = -work.eps;
  work.g = -work.g;
  auto mirrored = spectrum_validated(work, options);
  SemiclassicalSpectrum out;
  out.params = params;
  for (auto it = mirrored.levels.rbegin(); it != mirrored.levels.rend(); ++it) {
    LevelInfo lv = *it;
    lv.energy = -lv.energy;
    out.levels.push_back(lv);
    out.energies.push_back(lv.energy);
  }
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("BOSESEMI_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min(n, 1024L));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<SweepPoint> sweep_epsilon(const ModelParams& params, const std::vector<double>& eps_grid,
                                      bool exact, bool semiclassical,
                                      const QuantizeOptions& options, int threads) {
  params.validate();
  std::vector<SweepPoint> out(eps_grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < eps_grid.size(); i = next++) {
      SweepPoint& pt = out[i];
      pt.eps = eps_grid[i];
      ModelParams p = params;
      p.eps = eps_grid[i];
      try {
        if (exact) pt.exact = exact_spectrum(p).energies;
        if (p.v != 0.0) {
          pt.stationary = fixed_points(p);
          pt.swallowtail = pt.stationary.size() == 4;
        }
        if (semiclassical) pt.semiclassical = semiclassical_spectrum(p, options).energies;
      } catch (const std::exception& e) {
        pt.error = e.what();
      }
    }
  };
  const int n = std::clamp(threads > 0 ? threads : default_thread_count(), 1,
                           static_cast<int>(std::max<std::size_t>(1, eps_grid.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

}  // namespace bosesemi
