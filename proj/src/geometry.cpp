#include "wqed/geometry.hpp"

#include <stdexcept>
#include <vector>

#include "wqed/turning_points.hpp"

namespace wqed {

double instantaneous_speed(const AmplitudeTrace& trace, double beta, const MCFunction& metric,
                           double t, Side side, Coherence coherence) {
  const Complex c = trace.value_at(t);
  const Complex cdot = trace.derivative_at(t, side);
  const auto state = evolve_state<double>(beta, c, t, coherence);
  const auto rhodot = state_derivative<double>(beta, c, cdot, coherence);
  return metric_speed<double>(spectral_decompose<double>(state), rhodot, metric);
}

double average_speed(const AmplitudeTrace& trace, double beta, const MCFunction& metric,
                     double tau, const SpeedOptions& options) {
  if (!(tau > 0.0)) throw std::invalid_argument("average_speed: tau must be positive");
  if (tau > trace.horizon() * (1.0 + 1e-12)) {
    throw std::invalid_argument("average_speed: tau beyond trace horizon");
  }
  tau = std::min(tau, trace.horizon());
  if (beta == 0.0) return 0.0;

  auto speed = [&](double t, Side side) {
    return instantaneous_speed(trace, beta, metric, t, side, options.coherence);
  };

  // First segment in u = sqrt(t). The integrand 2u V(u^2) tends to a finite
  // limit at u = 0 that cannot be evaluated there (0 * inf); it is sampled a
  // short distance inside instead, which is exact to O(offset^2).
  const double first_end = std::min(trace.frame().t_delay, tau);
  const double u_end = std::sqrt(first_end);
  const double u_offset = 1e-4 * u_end;
  auto substituted = [&](double u) {
    if (u >= u_end) return 2.0 * u_end * speed(first_end, Side::left);
    const double us = std::max(u, u_offset);
    return 2.0 * us * speed(us * us, Side::right);
  };
  double length = adaptive_simpson(substituted, 0.0, u_end, options.quadrature);

  std::vector<double> breaks;
  for (double k : trace.kinks()) {
    if (k > first_end && k < tau) breaks.push_back(k);
  }
  for (double t : population_turning_points(trace, tau)) {
    if (t > first_end && t < tau) breaks.push_back(t);
  }
  breaks.push_back(tau);
  std::sort(breaks.begin(), breaks.end());

  double start = first_end;
  for (double end : breaks) {
    if (end - start <= 1e-13 * tau) continue;
    auto segment = [&](double t) { return speed(t, t >= end ? Side::left : Side::right); };
    length += adaptive_simpson(segment, start, end, options.quadrature);
    start = end;
  }
  return length / tau;
}

}  // namespace wqed
