#include "wqed/cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>

#include "wqed/geometry.hpp"
#include "wqed/infoflow.hpp"
#include "wqed/mc_function.hpp"

namespace wqed::cli {

namespace {

std::string fmt(double value) { return format_double(value); }

double normalization(const RunConfig& config) { return config.normalize.value_or(1.0); }

void set_variable(PhysicalParams& params, SweepVariable variable, double value) {
  switch (variable) {
    case SweepVariable::phi:
      params.phi = wrap_phase(value);
      break;
    case SweepVariable::omega:
      params.omega = value;
      break;
    case SweepVariable::t_delay:
      params.t_delay = value;
      break;
  }
}

void check_verification(const DressedFrame& frame, const RunConfig& config) {
  const double gap = series_dde_discrepancy(frame, config.params.tau, config.grid_n);
  if (!(gap <= kVerifyTolerance)) {
    throw VerificationError("series/DDE disagreement " + fmt(gap) + " exceeds " +
                            fmt(kVerifyTolerance));
  }
}

}  // namespace

double series_dde_discrepancy(const DressedFrame& frame, double horizon, std::size_t grid_n) {
  const AmplitudeTrace series = amplitude_trace(frame, horizon, grid_n);
  const AmplitudeTrace dde =
      amplitude_dde(frame, frame.t_delay / static_cast<double>(grid_n), horizon);
  double worst = 0.0;
  const std::size_t n = std::min(series.size(), dde.size());
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(series.values()[i] - dde.values()[i]));
  }
  if (series.size() != dde.size()) worst = std::numeric_limits<double>::infinity();
  return worst;
}

std::vector<std::string> parameter_echo(const RunConfig& config, std::string_view command) {
  const auto& p = config.params;
  std::vector<std::string> lines;
  lines.push_back("wqed simulate " + std::string(kVersion));
  lines.push_back("command: " + std::string(command));
  lines.push_back("gamma=" + fmt(p.gamma));
  lines.push_back("omega=" + fmt(p.omega));
  lines.push_back("delta=" + fmt(p.delta));
  lines.push_back("phi=" + fmt(p.phi));
  lines.push_back("t_delay=" + fmt(p.t_delay));
  lines.push_back("beta=" + fmt(p.beta));
  lines.push_back("tau=" + fmt(p.tau));
  lines.push_back(std::string("zero_drive=") +
                  (p.zero_drive == ZeroDrive::bare ? "bare" : "dressed"));
  lines.push_back("metric=" + metric_by_name(config.metric).name());
  lines.push_back("grid_n=" + std::to_string(config.grid_n));
  lines.push_back(std::string("coherence=") +
                  (config.coherence == Coherence::complex_amplitude ? "complex" : "real"));
  lines.push_back("normalize=" + (config.normalize ? fmt(*config.normalize) : "none"));
  if (config.sweep) {
    lines.push_back("sweep=" + std::string(to_string(config.sweep->variable)) +
                    " start=" + fmt(config.sweep->start) + " stop=" + fmt(config.sweep->stop) +
                    " count=" + std::to_string(config.sweep->count));
  }
  return lines;
}

MeasureReport measure(const RunConfig& config) {
  const DressedFrame frame = derive_frame(config.params);
  if (config.verify) check_verification(frame, config);

  const double tau = config.params.tau;
  const AmplitudeTrace trace = amplitude_trace(frame, tau, config.grid_n);
  MeasureReport report;
  report.params = config.params;
  if (config.outputs.speed) {
    SpeedOptions options;
    options.coherence = config.coherence;
    report.average_speed = average_speed(trace, config.params.beta,
                                         metric_by_name(config.metric), tau, options) /
                           normalization(config);
  }
  if (config.outputs.flow) {
    const FlowReport flow = information_flow(trace, tau);
    report.aleph = flow.aleph;
    report.aleph_total = flow.aleph_total;
  }
  report.p_tau = trace.population_at(tau);
  report.p_steady = steady_population(frame);
  return report;
}

Table run_trace(const RunConfig& config) {
  config.validate();
  const DressedFrame frame = derive_frame(config.params);
  const double tau = config.params.tau;
  const double beta = config.params.beta;

  Table table;
  table.comments = parameter_echo(config, "trace");
  if (config.verify) {
    const double gap = series_dde_discrepancy(frame, tau, config.grid_n);
    table.comments.push_back("verify: max|c_series - c_dde| = " + fmt(gap));
    if (!(gap <= kVerifyTolerance)) {
      throw VerificationError("series/DDE disagreement " + fmt(gap) + " exceeds " +
                              fmt(kVerifyTolerance));
    }
  }

  const AmplitudeTrace trace = amplitude_trace(frame, tau, config.grid_n);
  const MCFunction metric = metric_by_name(config.metric);
  const double scale = normalization(config);

  table.columns.push_back("t");
  if (config.outputs.trace) {
    for (const char* name : {"re_c", "im_c", "P"}) table.columns.push_back(name);
  }
  if (config.outputs.speed) table.columns.push_back("V");
  if (config.outputs.flow) {
    table.columns.push_back("sigma");
    table.columns.push_back("R");
  }

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double t = trace.times()[i];
    const Complex c = trace.values()[i];
    const double sigma = 2.0 * std::real(std::conj(c) * trace.derivatives()[i]);
    std::vector<double> row{t};
    if (config.outputs.trace) {
      row.push_back(c.real());
      row.push_back(c.imag());
      row.push_back(std::norm(c));
    }
    if (config.outputs.speed) {
      // the initial state is pure, where the speed diverges like t^{-1/2}
      const bool singular = t == 0.0 && beta > 0.0 && frame.decay > 0.0;
      const double v = singular ? std::numeric_limits<double>::infinity()
                                : instantaneous_speed(trace, beta, metric, t, Side::right,
                                                      config.coherence);
      row.push_back(v / scale);
    }
    if (config.outputs.flow) {
      row.push_back(sigma);
      row.push_back(std::abs(sigma));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table run_sweep(const RunConfig& config) {
  config.validate();
  if (!config.sweep) throw std::invalid_argument("sweep: no sweep variable given");
  const Sweep sweep = *config.sweep;

  std::vector<MeasureReport> reports(sweep.count);
  std::vector<std::exception_ptr> failures(sweep.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < sweep.count; i = next++) {
      try {
        RunConfig point = config;
        point.sweep.reset();
        set_variable(point.params, sweep.variable, sweep.value(i));
        point.params.validate();
        reports[i] = measure(point);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, sweep.count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < sweep.count; ++i) {
    if (!failures[i]) continue;
    const std::string where = "sweep point " + std::string(to_string(sweep.variable)) + "=" +
                              fmt(sweep.value(i)) + ": ";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const VerificationError& e) {
      throw VerificationError(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }

  Table table;
  table.comments = parameter_echo(config, "sweep");
  table.columns.push_back(std::string(to_string(sweep.variable)));
  if (config.outputs.speed) table.columns.push_back("V_a");
  if (config.outputs.flow) {
    table.columns.push_back("aleph");
    table.columns.push_back("aleph_total");
  }
  if (config.outputs.trace) {
    table.columns.push_back("P_tau");
    table.columns.push_back("P_steady");
  }
  for (std::size_t i = 0; i < sweep.count; ++i) {
    const MeasureReport& r = reports[i];
    std::vector<double> row{sweep.value(i)};
    if (config.outputs.speed) row.push_back(r.average_speed);
    if (config.outputs.flow) {
      row.push_back(r.aleph);
      row.push_back(r.aleph_total);
    }
    if (config.outputs.trace) {
      row.push_back(r.p_tau);
      row.push_back(r.p_steady);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Family {
  SweepVariable variable;
  std::string key;  // setting key that overrides it
  std::vector<double> values;
  std::vector<std::string> labels;
};

struct Preset {
  std::string title;
  bool trace = false;
  PhysicalParams params;
  std::optional<Sweep> sweep;
  std::optional<Family> family;
  std::vector<std::string> quantities;
  std::vector<std::string> notes;
};

Family phi_family() {
  return {SweepVariable::phi, "phi", {0.0, kPi / 2.0, kPi}, {"phi=0", "phi=pi/2", "phi=pi"}};
}

Preset make_preset(std::string_view raw) {
  std::string name(raw);
  if (name == "fig3") name = "fig3a";
  if (name == "fig6") name = "fig6a";
  if (name == "fig7") name = "fig7a";

  Preset p;
  p.params.gamma = 1.0;
  p.params.omega = 0.0;
  p.params.delta = 0.0;
  p.params.beta = 1.0;
  p.params.tau = 10.0;
  p.params.t_delay = 2.0;
  const Sweep phi_sweep{SweepVariable::phi, 0.0, 2.0 * kPi, 65};
  const Sweep omega_sweep{SweepVariable::omega, 0.05, 4.0, 80};

  if (name == "fig2") {
    p.title = "Average speed vs mirror phase";
    p.sweep = phi_sweep;
    p.family = Family{SweepVariable::t_delay, "t-delay", {0.2, 2.0, 20.0},
                      {"t_d=0.2", "t_d=2", "t_d=20"}};
    p.quantities = {"V_a"};
    p.notes = {"preset fig2: Omega=0; the very large memory time is represented by t_d=20 "
               "(t_d >= tau, feedback never active)"};
  } else if (name == "fig3a" || name == "fig3b") {
    p.title = "Average speed vs driving strength";
    p.params.t_delay = name == "fig3a" ? 0.2 : 2.0;
    p.sweep = omega_sweep;
    p.family = phi_family();
    p.quantities = {"V_a"};
    p.notes = {"preset " + name + ": Omega sampled strictly positive; legend phases 0, pi/2, pi "
               "chosen as representative values"};
  } else if (name == "fig4") {
    p.title = "Excited population";
    p.trace = true;
    p.params.tau = 50.0;
    p.family = phi_family();
    p.quantities = {"P"};
    p.notes = {"preset fig4: horizon extended to Gamma*t=50 to show the trapping plateau"};
  } else if (name == "fig5") {
    p.title = "Non-Markovianity and average speed vs mirror phase";
    p.sweep = phi_sweep;
    p.quantities = {"aleph", "V_a"};
  } else if (name == "fig6a" || name == "fig6b") {
    p.title = "Instantaneous speed and information flow rate";
    p.trace = true;
    p.params.phi = name == "fig6a" ? 0.0 : kPi / 2.0;
    p.quantities = {"V", "R"};
  } else if (name == "fig7a" || name == "fig7b") {
    p.title = "Total information flow vs driving strength";
    p.params.t_delay = name == "fig7a" ? 0.2 : 2.0;
    p.sweep = omega_sweep;
    p.family = phi_family();
    p.quantities = {"aleph_total"};
    p.notes = {"preset " + name + ": Omega sampled strictly positive; legend phases 0, pi/2, pi "
               "chosen as representative values"};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(raw) + "'");
  }
  return p;
}

void copy_param(PhysicalParams& dst, const PhysicalParams& src, const std::string& key) {
  if (key == "gamma") dst.gamma = src.gamma;
  if (key == "omega") dst.omega = src.omega;
  if (key == "delta") dst.delta = src.delta;
  if (key == "phi") dst.phi = src.phi;
  if (key == "t-delay") dst.t_delay = src.t_delay;
  if (key == "beta") dst.beta = src.beta;
  if (key == "tau") dst.tau = src.tau;
  if (key == "zero-drive") dst.zero_drive = src.zero_drive;
}

Table merge_family(const std::vector<Table>& parts, const Family& family,
                   const std::vector<std::string>& quantities) {
  Table merged;
  merged.columns.push_back(parts.front().columns.front());
  for (const auto& q : quantities) {
    for (const auto& label : family.labels) {
      merged.columns.push_back(q + "[" + label + "]");
      merged.plot_columns.push_back(merged.columns.back());
    }
  }
  const std::size_t rows = parts.front().rows.size();
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> row{parts.front().rows[r][0]};
    for (const auto& q : quantities) {
      for (const auto& part : parts) {
        row.push_back(part.rows.at(r).at(part.column_index(q)));
      }
    }
    merged.rows.push_back(std::move(row));
  }
  return merged;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2", "fig3", "fig3a", "fig3b", "fig4", "fig5",
          "fig6", "fig6a", "fig6b", "fig7", "fig7a", "fig7b"};
}

Table run_preset(std::string_view name, const RunConfig& base,
                 const std::set<std::string>& overridden) {
  const Preset preset = make_preset(name);

  RunConfig config = base;
  config.params = preset.params;
  for (const auto& key : overridden) copy_param(config.params, base.params, key);
  config.sweep = preset.sweep;
  if (config.sweep) {
    if (overridden.count("start")) config.sweep->start = base.sweep->start;
    if (overridden.count("stop")) config.sweep->stop = base.sweep->stop;
    if (overridden.count("count")) config.sweep->count = base.sweep->count;
  }

  const bool narrowed = preset.family && overridden.count(preset.family->key) > 0;
  const std::string command = "preset " + std::string(name);

  Table table;
  if (!preset.family || narrowed) {
    table = preset.trace ? run_trace(config) : run_sweep(config);
    table.plot_columns.clear();
    for (const auto& q : preset.quantities) {
      if (std::find(table.columns.begin(), table.columns.end(), q) != table.columns.end()) {
        table.plot_columns.push_back(q);
      }
    }
  } else {
    std::vector<Table> parts;
    for (double value : preset.family->values) {
      RunConfig member = config;
      set_variable(member.params, preset.family->variable, value);
      parts.push_back(preset.trace ? run_trace(member) : run_sweep(member));
    }
    table = merge_family(parts, *preset.family, preset.quantities);
  }

  std::vector<std::string> comments = parameter_echo(config, command);
  for (const auto& note : preset.notes) comments.push_back(note);
  if (preset.family && !narrowed) {
    std::string values = "curve family " + std::string(to_string(preset.family->variable)) + ":";
    for (const auto& label : preset.family->labels) values += " " + label;
    comments.push_back(values);
  }
  for (const auto& line : table.comments) {
    if (line.rfind("verify:", 0) == 0) comments.push_back(line);
  }
  table.comments = std::move(comments);
  table.title = preset.title;
  return table;
}

}  // namespace wqed::cli
