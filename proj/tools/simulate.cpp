// simulate: command-line front end for the waveguide-QED speed and
// information-flow library.
//
//   simulate trace  [flags]          time series t, re_c, im_c, P, V, sigma, R
//   simulate sweep  --sweep phi ...  one MeasureReport row per sweep value
//   simulate preset fig5 [flags]     figure reproduction
//
// Exit status: 0 success, 1 invalid input, 2 verification failure.

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "wqed/cli/run_config.hpp"
#include "wqed/cli/runner.hpp"
#include "wqed/cli/svg.hpp"
#include "wqed/cli/table.hpp"

namespace {

using Settings = std::vector<std::pair<std::string, std::string>>;

void add_common_flags(CLI::App& app, Settings& settings, std::string& config_path) {
  auto value_flag = [&](const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + key, [&settings, key](const std::string& v) { settings.emplace_back(key, v); },
        help);
  };
  value_flag("gamma", "spontaneous emission rate (unit scale)");
  value_flag("omega", "classical driving strength, >= 0");
  value_flag("delta", "detuning omega_0 - omega_L");
  value_flag("phi", "mirror phase in radians");
  value_flag("t-delay", "photon round-trip time");
  value_flag("beta", "initial |+> weight in [0, 1]");
  value_flag("tau", "observation horizon");
  value_flag("metric", "wy | min | max");
  value_flag("grid-n", "grid points per delay interval (>= 100)");
  value_flag("normalize", "divide V and V_a by this constant");
  value_flag("output", "output file (default: standard output)");
  value_flag("format", "csv | svg");
  value_flag("outputs", "comma list of trace, speed, flow");
  value_flag("zero-drive", "frame at Omega = Delta = 0: bare | dressed");
  value_flag("sweep", "sweep variable: phi | omega | t-delay");
  value_flag("start", "sweep start value");
  value_flag("stop", "sweep stop value");
  value_flag("count", "number of sweep points (>= 2)");
  app.add_flag_function(
      "--verify", [&settings](std::int64_t) { settings.emplace_back("verify", "true"); },
      "cross-check the series against DDE integration; exit 2 above 1e-6");
  app.add_flag_function(
      "--real-coherence",
      [&settings](std::int64_t) { settings.emplace_back("real-coherence", "true"); },
      "use the real sqrt(P) off-diagonal instead of the complex amplitude");
  app.add_option("--config", config_path, "key=value settings file; flags override it");
}

void emit(const wqed::cli::Table& table, const wqed::cli::RunConfig& config) {
  const std::string content = config.format == wqed::cli::OutputFormat::svg
                                  ? wqed::cli::render_svg(table)
                                  : table.to_csv();
  if (config.output.empty()) {
    std::cout << content;
    std::cout.flush();
  } else {
    wqed::cli::write_file_atomic(config.output, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven qubit in front of a mirror: amplitude, evolution speed, information flow"};
  app.require_subcommand(1);

  Settings settings;
  std::string config_path;
  std::string preset_name;

  CLI::App* trace = app.add_subcommand("trace", "time series on [0, tau]");
  CLI::App* sweep = app.add_subcommand("sweep", "scalar measures across a parameter sweep");
  CLI::App* preset = app.add_subcommand("preset", "figure presets");
  preset->add_option("name", preset_name, "fig2 | fig3[a|b] | fig4 | fig5 | fig6[a|b] | fig7[a|b]")
      ->required();
  for (CLI::App* sub : {trace, sweep, preset}) add_common_flags(*sub, settings, config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    wqed::cli::RunConfig config;
    std::set<std::string> explicit_keys;
    if (!config_path.empty()) explicit_keys = wqed::cli::apply_config_file(config, config_path);
    for (const auto& [key, value] : settings) {
      wqed::cli::apply_setting(config, key, value);
      explicit_keys.insert(wqed::cli::normalize_key(key));
    }

    wqed::cli::Table table;
    if (trace->parsed()) {
      table = wqed::cli::run_trace(config);
    } else if (sweep->parsed()) {
      table = wqed::cli::run_sweep(config);
    } else {
      table = wqed::cli::run_preset(preset_name, config, explicit_keys);
    }
    emit(table, config);
  } catch (const wqed::cli::VerificationError& e) {
    std::cerr << "simulate: verification failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
