#include "wqed/infoflow.hpp"

#include <algorithm>
#include <stdexcept>

#include "wqed/turning_points.hpp"

namespace wqed {

std::vector<double> optimal_pair_distance(const AmplitudeTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.size());
  for (const Complex& c : trace.values()) out.push_back(std::norm(c));
  return out;
}

std::vector<double> sigma_rate(const AmplitudeTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.size());
  const auto& c = trace.values();
  const auto& cdot = trace.derivatives();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out.push_back(2.0 * std::real(std::conj(c[i]) * cdot[i]));
  }
  return out;
}

std::vector<double> flow_rate(const AmplitudeTrace& trace) {
  std::vector<double> out = sigma_rate(trace);
  for (double& r : out) r = std::abs(r);
  return out;
}

FlowReport information_flow(const AmplitudeTrace& trace, double horizon) {
  if (horizon > trace.horizon() * (1.0 + 1e-12)) {
    throw std::invalid_argument("information_flow: horizon beyond trace");
  }
  horizon = std::min(horizon, trace.horizon());
  const TurningPointOptions options;

  FlowReport report;
  report.d0 = trace.population_at(0.0);
  report.dtau = trace.population_at(horizon);

  std::vector<double> cuts = population_turning_points(trace, horizon, options);
  for (double t : cuts) report.extrema.push_back({t, trace.population_at(t)});
  cuts.push_back(horizon);

  double start = 0.0;
  double d_start = report.d0;
  for (double end : cuts) {
    const double d_end = end == horizon ? report.dtau : trace.population_at(end);
    const double change = d_end - d_start;
    report.aleph_total += std::abs(change);
    const double mid = 0.5 * (start + end);
    if (trace.population_rate_at(mid) > options.plateau) report.aleph += change;
    start = end;
    d_start = d_end;
  }
  return report;
}

double total_flow_quadrature(const AmplitudeTrace& trace, double horizon,
                             const QuadratureOptions& options) {
  if (horizon > trace.horizon() * (1.0 + 1e-12)) {
    throw std::invalid_argument("total_flow_quadrature: horizon beyond trace");
  }
  horizon = std::min(horizon, trace.horizon());
  std::vector<double> cuts;
  for (double k : trace.kinks()) {
    if (k < horizon) cuts.push_back(k);
  }
  for (double t : population_turning_points(trace, horizon)) cuts.push_back(t);
  cuts.push_back(horizon);
  std::sort(cuts.begin(), cuts.end());

  double total = 0.0;
  double start = 0.0;
  for (double end : cuts) {
    if (end <= start) continue;
    auto rate = [&](double t) {
      return std::abs(trace.population_rate_at(t, t >= end ? Side::left : Side::right));
    };
    total += adaptive_simpson(rate, start, end, options);
    start = end;
  }
  return total;
}

}  // namespace wqed
