#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include "wqed/cli/run_config.hpp"
#include "wqed/mc_function.hpp"

namespace wqed::cli {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  const double value = parse_number(text, what);
  if (value < 0.0 || value != std::floor(value) || value > 1e9) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(value);
}

bool parse_bool(std::string_view text, std::string_view what) {
  const std::string v = trim(text);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument(std::string(what) + ": expected a boolean, got '" + v + "'");
}

}  // namespace

std::string_view to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::phi:
      return "phi";
    case SweepVariable::omega:
      return "omega";
    case SweepVariable::t_delay:
      return "t_delay";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view text) {
  const std::string v = trim(text);
  if (v == "phi") return SweepVariable::phi;
  if (v == "omega") return SweepVariable::omega;
  if (v == "t-delay" || v == "t_delay") return SweepVariable::t_delay;
  throw std::invalid_argument("sweep variable must be phi, omega or t-delay, got '" + v + "'");
}

double Sweep::value(std::size_t index) const {
  if (count < 2) return start;
  return start + (stop - start) * static_cast<double>(index) / static_cast<double>(count - 1);
}

double parse_number(std::string_view text, std::string_view what) {
  const std::string v = trim(text);
  if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty value");
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + ": not a finite number: '" + v + "'");
  }
  return value;
}

void RunConfig::validate() const {
  params.validate();
  metric_by_name(metric);
  if (grid_n < 100) throw std::invalid_argument("grid-n must be at least 100");
  if (normalize && !(*normalize > 0.0)) {
    throw std::invalid_argument("normalize must be a positive constant");
  }
  if (sweep) {
    if (!std::isfinite(sweep->start) || !std::isfinite(sweep->stop)) {
      throw std::invalid_argument("sweep bounds must be finite");
    }
    if (sweep->count < 2) throw std::invalid_argument("sweep count must be at least 2");
  }
}

std::string normalize_key(std::string_view raw_key) {
  std::string key = trim(raw_key);
  for (char& ch : key) {
    if (ch == '_') ch = '-';
  }
  if (key == "sweep-var") key = "sweep";
  return key;
}

void apply_setting(RunConfig& config, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  auto& p = config.params;
  auto ensure_sweep = [&]() -> Sweep& {
    if (!config.sweep) config.sweep = Sweep{};
    return *config.sweep;
  };

  if (key == "gamma") {
    p.gamma = parse_number(value, key);
  } else if (key == "omega") {
    p.omega = parse_number(value, key);
  } else if (key == "delta") {
    p.delta = parse_number(value, key);
  } else if (key == "phi") {
    p.phi = wrap_phase(parse_number(value, key));
  } else if (key == "t-delay") {
    p.t_delay = parse_number(value, key);
  } else if (key == "beta") {
    p.beta = parse_number(value, key);
  } else if (key == "tau") {
    p.tau = parse_number(value, key);
  } else if (key == "metric") {
    config.metric = trim(value);
    metric_by_name(config.metric);
  } else if (key == "grid-n") {
    config.grid_n = parse_count(value, key);
  } else if (key == "verify") {
    config.verify = parse_bool(value, key);
  } else if (key == "normalize") {
    config.normalize = parse_number(value, key);
  } else if (key == "output") {
    config.output = trim(value);
  } else if (key == "format") {
    const std::string v = trim(value);
    if (v == "csv") {
      config.format = OutputFormat::csv;
    } else if (v == "svg") {
      config.format = OutputFormat::svg;
    } else {
      throw std::invalid_argument("format must be csv or svg");
    }
  } else if (key == "real-coherence") {
    config.coherence =
        parse_bool(value, key) ? Coherence::real_magnitude : Coherence::complex_amplitude;
  } else if (key == "zero-drive") {
    const std::string v = trim(value);
    if (v == "bare") {
      p.zero_drive = ZeroDrive::bare;
    } else if (v == "dressed") {
      p.zero_drive = ZeroDrive::dressed_limit;
    } else {
      throw std::invalid_argument("zero-drive must be bare or dressed");
    }
  } else if (key == "outputs") {
    OutputSet set{false, false, false};
    std::string list = trim(value);
    std::size_t pos = 0;
    while (pos <= list.size()) {
      const auto comma = list.find(',', pos);
      const std::string item =
          trim(std::string_view(list).substr(pos, comma == std::string::npos ? list.npos : comma - pos));
      if (item == "trace") {
        set.trace = true;
      } else if (item == "speed") {
        set.speed = true;
      } else if (item == "flow") {
        set.flow = true;
      } else {
        throw std::invalid_argument("outputs: unknown group '" + item + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    config.outputs = set;
  } else if (key == "sweep") {
    ensure_sweep().variable = parse_sweep_variable(value);
  } else if (key == "start") {
    ensure_sweep().start = parse_number(value, key);
  } else if (key == "stop") {
    ensure_sweep().stop = parse_number(value, key);
  } else if (key == "count") {
    ensure_sweep().count = parse_count(value, key);
  } else {
    throw std::invalid_argument("unknown setting '" + key + "'");
  }
}

std::set<std::string> apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::set<std::string> keys;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(number) +
                                  ": expected key=value");
    }
    try {
      apply_setting(config, text.substr(0, eq), text.substr(eq + 1));
      keys.insert(normalize_key(text.substr(0, eq)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return keys;
}

}  // namespace wqed::cli
