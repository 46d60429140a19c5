// Command-line front end: spectra, eps sweeps, level densities, momentum
// wavefunctions and phase-space portraits as CSV or JSON.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "bosesemi/commands.hpp"

using namespace bosesemi;

namespace {

struct Flags {
  int particles = 0;
  double epsilon = 0.0;
  double v = 1.0;
  std::optional<double> g;
  std::optional<double> g_over_ns;
  double hbar = 1.0;
  std::string out = "-";
  std::string format = "csv";
  std::string method;
  std::string sweep;
  int state = 0;
  int bins = 60;
  std::string grid = "200x200";
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Flags& f) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--particles", f.particles, "particle number N")->required();
  sub->add_option("--epsilon", f.epsilon, "onsite bias");
  sub->add_option("--v", f.v, "mode coupling");
  auto* g = sub->add_option("--g", f.g, "interaction strength");
  auto* gx = sub->add_option("--g-over-ns", f.g_over_ns, "interaction in units of 1/(N+1)");
  g->excludes(gx);
  sub->add_option("--hbar", f.hbar, "Planck constant");
  sub->add_option("--out", f.out, "output path, - for stdout");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and semiclassical spectra of the two-mode Bose-Hubbard model"};
  app.require_subcommand(1);
  Flags f;
  const auto methods = CLI::IsMember({"exact", "semiclassical", "both"});

  std::map<CLI::App*, Command> commands;
  auto* spectrum = add_command(app, "spectrum", "eigenvalues, exact and semiclassical", f);
  spectrum->add_option("--method", f.method, "exact, semiclassical or both")->check(methods);
  commands[spectrum] = Command::spectrum;

  auto* sweep = add_command(app, "sweep", "spectra along a range of epsilon", f);
  sweep->add_option("--method", f.method, "exact, semiclassical or both")->check(methods);
  sweep->add_option("--sweep", f.sweep, "min:max:steps")->required();
  commands[sweep] = Command::sweep;

  auto* density = add_command(app, "density", "level density histogram", f);
  density->add_option("--method", f.method, "exact, semiclassical or both")->check(methods);
  density->add_option("--bins", f.bins, "number of histogram bins");
  commands[density] = Command::density;

  auto* wave = add_command(app, "wavefunction", "momentum distribution of one eigenstate", f);
  wave->add_option("--method", f.method, "exact, semiclassical or both")->check(methods);
  wave->add_option("--state", f.state, "state index n");
  commands[wave] = Command::wavefunction;

  auto* portrait = add_command(app, "portrait", "mean-field energy on a (q, p) grid", f);
  portrait->add_option("--grid", f.grid, "<nq>x<np>");
  commands[portrait] = Command::portrait;

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config;
    for (const auto& [sub, cmd] : commands) {
      if (sub->parsed()) config.command = cmd;
    }
    config.params.N = f.particles;
    config.params.eps = f.epsilon;
    config.params.v = f.v;
    config.params.hbar = f.hbar;
    if (f.g_over_ns) {
      config.params.g = *f.g_over_ns / config.params.ns_real();
    } else {
      config.params.g = f.g.value_or(0.0);
    }
    if (!f.method.empty()) {
      config.method = f.method == "exact"           ? Method::exact
                      : f.method == "semiclassical" ? Method::semiclassical
                                                    : Method::both;
    }
    if (!f.sweep.empty()) config.sweep = parse_sweep(f.sweep);
    config.state = f.state;
    config.bins = f.bins;
    std::tie(config.grid_q, config.grid_p) = parse_grid(f.grid);
    config.out = f.out;
    config.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;

    const CommandResult result = run_command(config);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

    if (config.out == "-") {
      write_table(std::cout, config.format, config.to_json(), result.table);
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + config.out);
      write_table(file, config.format, config.to_json(), result.table);
    }
    return result.ok ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
