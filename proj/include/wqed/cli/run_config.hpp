#ifndef WQED_CLI_RUN_CONFIG_HPP
#define WQED_CLI_RUN_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "wqed/model.hpp"
#include "wqed/qstate.hpp"

namespace wqed::cli {

enum class SweepVariable { phi, omega, t_delay };

std::string_view to_string(SweepVariable variable);
SweepVariable parse_sweep_variable(std::string_view text);

struct Sweep {
  SweepVariable variable = SweepVariable::phi;
  double start = 0.0;
  double stop = kTwoPi;
  std::size_t count = 65;

  double value(std::size_t index) const;
};

enum class OutputFormat { csv, svg };

/// Column groups: trace (amplitude and population), speed (V, V_a) and
/// flow (sigma, R, aleph, aleph_total).
struct OutputSet {
  bool trace = true;
  bool speed = true;
  bool flow = true;
};

struct RunConfig {
  PhysicalParams params;
  std::optional<Sweep> sweep;
  std::string metric = "wy";
  OutputSet outputs;
  OutputFormat format = OutputFormat::csv;
  std::optional<double> normalize;
  std::size_t grid_n = 1000;
  bool verify = false;
  Coherence coherence = Coherence::complex_amplitude;
  std::filesystem::path output;  // empty: standard output

  /// Throws std::invalid_argument.
  void validate() const;
};

/// Apply one `key=value` setting. Keys are the long CLI flag names without
/// dashes (`t-delay`, `grid-n`, ...); `_` is accepted in place of `-`.
/// Throws std::invalid_argument for unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Canonical spelling of a setting key (trimmed, `_` replaced by `-`).
std::string normalize_key(std::string_view key);

/// Read `key=value` lines; blank lines and `#` comments are skipped.
/// Returns the canonical keys that were set.
std::set<std::string> apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Parse a finite floating-point number; throws std::invalid_argument.
double parse_number(std::string_view text, std::string_view what);

}  // namespace wqed::cli

#endif  // WQED_CLI_RUN_CONFIG_HPP
