#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bosesemi/output.hpp"
#include "bosesemi/params.hpp"

namespace bosesemi {

enum class Command { spectrum, sweep, density, wavefunction, portrait };
enum class Method { exact, semiclassical, both };

struct SweepSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 2;

  [[nodiscard]] std::vector<double> values() const;
};

/// Everything one CLI invocation needs.
struct RunConfig {
  Command command = Command::spectrum;
  ModelParams params;
  std::optional<Method> method;  // per-command default when unset
  std::optional<SweepSpec> sweep;
  int state = 0;
  int bins = 60;
  int grid_q = 200;
  int grid_p = 200;
  std::string out = "-";
  OutputFormat format = OutputFormat::csv;

  /// Throws DomainError on inconsistent settings.
  void validate() const;
  [[nodiscard]] Method effective_method() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

struct CommandResult {
  Table table;
  std::vector<std::string> warnings;
  bool ok = true;  // false if part of the computation failed
};

/// "min:max:steps"
SweepSpec parse_sweep(std::string_view text);
/// "<nq>x<np>"
std::pair<int, int> parse_grid(std::string_view text);

std::string_view to_string(Command c);
std::string_view to_string(Method m);

CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);
CommandResult cmd_density(const RunConfig& config);
CommandResult cmd_wavefunction(const RunConfig& config);
CommandResult cmd_portrait(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

}  // namespace bosesemi
