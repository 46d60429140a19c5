#include "bosesemi/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "bosesemi/action.hpp"
#include "bosesemi/meanfield.hpp"
#include "bosesemi/quantize.hpp"
#include "bosesemi/quantum.hpp"
#include "bosesemi/wavefun.hpp"

namespace bosesemi {

using std::numbers::pi;

namespace {

template <class T>
T parse_number(std::string_view s, const char* what) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw DomainError(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  }
  return value;
}

std::int64_t as_int(int v) { return static_cast<std::int64_t>(v); }

bool wants_exact(Method m) { return m != Method::semiclassical; }
bool wants_semiclassical(Method m) { return m != Method::exact; }

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  if (steps == 1) return {min};
  for (int i = 0; i < steps; ++i) {
    out.push_back(min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return out;
}

SweepSpec parse_sweep(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (a == std::string_view::npos || b == std::string_view::npos) {
    throw DomainError("sweep must look like min:max:steps");
  }
  SweepSpec s;
  s.min = parse_number<double>(text.substr(0, a), "sweep minimum");
  s.max = parse_number<double>(text.substr(a + 1, b - a - 1), "sweep maximum");
  s.steps = parse_number<int>(text.substr(b + 1), "sweep steps");
  if (s.steps < 1) throw DomainError("sweep steps must be positive");
  if (s.max < s.min) throw DomainError("sweep maximum is below its minimum");
  return s;
}

std::pair<int, int> parse_grid(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw DomainError("grid must look like <nq>x<np>");
  const int nq = parse_number<int>(text.substr(0, x), "grid nq");
  const int np = parse_number<int>(text.substr(x + 1), "grid np");
  if (nq < 2 || np < 2) throw DomainError("grid needs at least 2 points per axis");
  return {nq, np};
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::sweep: return "sweep";
    case Command::density: return "density";
    case Command::wavefunction: return "wavefunction";
    case Command::portrait: return "portrait";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::semiclassical: return "semiclassical";
    case Method::both: return "both";
  }
  return "?";
}

Method RunConfig::effective_method() const {
  if (method) return *method;
  return command == Command::density ? Method::exact : Method::both;
}

void RunConfig::validate() const {
  params.validate();
  if (command == Command::sweep) {
    if (!sweep) throw DomainError("sweep needs --sweep min:max:steps");
    if (sweep->steps < 1) throw DomainError("sweep steps must be positive");
    if (sweep->steps == 1 && sweep->min != sweep->max) {
      throw DomainError("a sweep over a range needs at least 2 steps");
    }
  }
  if (command == Command::wavefunction && (state < 0 || state > params.N)) {
    throw DomainError("state index must lie in 0..N");
  }
  if (command == Command::density && bins < 2) throw DomainError("density needs at least 2 bins");
  if (command == Command::portrait && (grid_q < 2 || grid_p < 2)) {
    throw DomainError("portrait grid needs at least 2x2 points");
  }
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = std::string(to_string(command));
  j["particles"] = params.N;
  j["epsilon"] = params.eps;
  j["v"] = params.v;
  j["g"] = params.g;
  j["hbar"] = params.hbar;
  j["method"] = std::string(to_string(effective_method()));
  if (sweep) {
    j["sweep"] = {{"min", sweep->min}, {"max", sweep->max}, {"steps", sweep->steps}};
  } else {
    j["sweep"] = nullptr;
  }
  j["state"] = state;
  j["bins"] = bins;
  j["grid"] = {{"nq", grid_q}, {"np", grid_p}};
  j["format"] = format == OutputFormat::csv ? "csv" : "json";
  return j;
}

CommandResult cmd_spectrum(const RunConfig& config) {
  config.validate();
  const Method m = config.effective_method();
  const ModelParams& p = config.params;
  CommandResult res;
  res.table.columns = {"n", "E_exact", "E_semiclassical", "abs_diff", "rel_diff", "region",
                       "orbit_class"};
  std::optional<Spectrum> ex;
  std::optional<SemiclassicalSpectrum> sc;
  if (wants_exact(m)) ex = exact_spectrum(p);
  if (wants_semiclassical(m)) sc = semiclassical_spectrum(p);
  const double width = ex ? ex->energies.back() - ex->energies.front() : 0.0;
  for (int n = 0; n <= p.N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    std::vector<Cell> row{as_int(n)};
    row.emplace_back(ex ? Cell{ex->energies[i]} : Cell{});
    row.emplace_back(sc ? Cell{sc->energies[i]} : Cell{});
    if (ex && sc) {
      const double d = std::abs(ex->energies[i] - sc->energies[i]);
      row.emplace_back(d);
      row.emplace_back(width > 0.0 ? Cell{d / width} : Cell{});
    } else {
      row.emplace_back();
      row.emplace_back();
    }
    if (sc) {
      row.emplace_back(std::string(to_string(sc->levels[i].region)));
      row.emplace_back(std::string(to_string(sc->levels[i].orbit_class)));
    }
    res.table.add(std::move(row));
  }
  return res;
}

CommandResult cmd_sweep(const RunConfig& config) {
  config.validate();
  const Method m = config.effective_method();
  CommandResult res;
  res.table.columns = {"eps",    "kind",  "index", "E_exact", "E_semiclassical",
                       "H_stat", "label", "error"};
  const auto points = sweep_epsilon(config.params, config.sweep->values(), wants_exact(m),
                                    wants_semiclassical(m));
  for (const auto& pt : points) {
    if (!pt.error.empty()) {
      res.ok = false;
      res.warnings.push_back("eps=" + format_real(pt.eps) + ": " + pt.error);
      res.table.add({pt.eps, std::string("error"), {}, {}, {}, {}, {}, pt.error});
    }
    const std::size_t levels = std::max(pt.exact.size(), pt.semiclassical.size());
    for (std::size_t n = 0; n < levels; ++n) {
      res.table.add({pt.eps, std::string("level"), static_cast<std::int64_t>(n),
                     n < pt.exact.size() ? Cell{pt.exact[n]} : Cell{},
                     n < pt.semiclassical.size() ? Cell{pt.semiclassical[n]} : Cell{}});
    }
    for (std::size_t k = 0; k < pt.stationary.size(); ++k) {
      const auto& fp = pt.stationary[k];
      res.table.add({pt.eps, std::string("Hstat"), static_cast<std::int64_t>(k), {}, {}, fp.energy,
                     std::string(to_string(fp.label))});
    }
  }
  return res;
}

CommandResult cmd_density(const RunConfig& config) {
  config.validate();
  const Method m = config.effective_method();
  const ModelParams& p = config.params;
  CommandResult res;
  res.table.columns = {"block",       "bin_lo",         "bin_hi",
                       "bin_center",  "height_exact",   "height_semiclassical",
                       "smooth_density", "smooth_bin_average", "energy",
                       "label"};
  std::optional<LevelDensity> hex;
  std::optional<LevelDensity> hsc;
  if (wants_exact(m)) hex = level_density(exact_spectrum(p), config.bins);
  if (wants_semiclassical(m)) {
    Spectrum s;
    s.params = p;
    s.energies = semiclassical_spectrum(p).energies;
    hsc = level_density(s, config.bins);
  }
  const LevelDensity& ref = hex ? *hex : *hsc;
  const double ns = p.ns_real();
  const EnergyRange range = classical_range(p);
  auto area = [&](double E) {
    return detail::area_integral(p, std::clamp(E, range.min, range.max), -ns, ns);
  };
  for (std::size_t i = 0; i + 1 < ref.bin_edges.size(); ++i) {
    const double lo = ref.bin_edges[i];
    const double hi = ref.bin_edges[i + 1];
    const double c = ref.bin_center(i);
    Cell smooth;
    try {
      smooth = detail::period_integral(p, c, -ns, ns) / (2.0 * pi * ns);
    } catch (const ConvergenceError&) {
      res.warnings.push_back("smooth density not converged at E=" + format_real(c));
    }
    const double avg = (area(hi) - area(lo)) / (2.0 * pi * ns * (hi - lo));
    res.table.add({std::string("histogram"), lo, hi, c, hex ? Cell{hex->heights[i]} : Cell{},
                   hsc ? Cell{hsc->heights[i]} : Cell{}, smooth, avg});
  }
  if (p.v != 0.0) {
    for (const auto& fp : fixed_points(p)) {
      res.table.add({std::string("stationary"), {}, {}, {}, {}, {}, {}, {}, fp.energy,
                     std::string(to_string(fp.label))});
    }
  }
  return res;
}

CommandResult cmd_wavefunction(const RunConfig& config) {
  config.validate();
  const Method m = config.effective_method();
  const ModelParams& p = config.params;
  const int n = config.state;
  CommandResult res;
  res.table.columns = {"p", "exact", "primitive", "uniform", "U_lower", "U_upper"};
  std::optional<MomentumWavefunction> ex;
  std::optional<MomentumWavefunction> pr;
  std::optional<MomentumWavefunction> un;
  if (wants_exact(m)) ex = p_representation(exact_spectrum(p, true), n);
  if (wants_semiclassical(m)) {
    const double E = semiclassical_spectrum(p).energies[static_cast<std::size_t>(n)];
    pr = primitive(p, n, E);
    try {
      un = uniform(p, n, E);
    } catch (const UnsupportedGeometry& e) {
      res.warnings.push_back(std::string("uniform approximation skipped: ") + e.what());
    }
  }
  for (int i = 0; i <= p.N; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const int label = 2 * i - p.N;
    const double mom = static_cast<double>(label) * p.hbar;
    const Potentials u = potentials(p, mom);
    res.table.add({as_int(label), ex ? Cell{ex->values[k]} : Cell{},
                   pr ? Cell{pr->values[k]} : Cell{}, un ? Cell{un->values[k]} : Cell{}, u.lower,
                   u.upper});
  }
  return res;
}

CommandResult cmd_portrait(const RunConfig& config) {
  config.validate();
  const ModelParams& p = config.params;
  CommandResult res;
  res.table.columns = {"block", "q", "p", "H", "energy", "kind", "label"};
  const double pmax = p.ns_real() * p.hbar;
  for (int i = 0; i < config.grid_q; ++i) {
    const double q = pi * static_cast<double>(i) / static_cast<double>(config.grid_q);
    for (int j = 0; j < config.grid_p; ++j) {
      const double mom = -pmax + 2.0 * pmax * static_cast<double>(j) /
                                     static_cast<double>(config.grid_p - 1);
      res.table.add({std::string("grid"), q, mom, hamiltonian(p, {q, mom})});
    }
  }
  if (p.v != 0.0) {
    for (const auto& fp : fixed_points(p)) {
      res.table.add({std::string("fixed_point"), fp.point.q, fp.point.p,
                     hamiltonian(p, fp.point), fp.energy, std::string(to_string(fp.kind)),
                     std::string(to_string(fp.label))});
      if (fp.kind == FixedPointKind::saddle) {
        res.table.add({std::string("separatrix"), {}, {}, {}, fp.energy, {}, {}});
      }
    }
  }
  return res;
}

CommandResult run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::spectrum: return cmd_spectrum(config);
    case Command::sweep: return cmd_sweep(config);
    case Command::density: return cmd_density(config);
    case Command::wavefunction: return cmd_wavefunction(config);
    case Command::portrait: return cmd_portrait(config);
  }
  throw DomainError("unknown command");
}

}  // namespace bosesemi
