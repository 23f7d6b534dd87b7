#include "wqed/turning_points.hpp"

#include <cmath>
#include <stdexcept>

namespace wqed {

namespace {

int classify(double rate, double plateau) {
  if (rate > plateau) return 1;
  if (rate < -plateau) return -1;
  return 0;
}

struct Sample {
  double t;
  double rate;
};

}  // namespace

std::vector<double> population_turning_points(const AmplitudeTrace& trace, double horizon,
                                              const TurningPointOptions& options) {
  if (horizon > trace.horizon()) {
    throw std::invalid_argument("population_turning_points: horizon beyond trace");
  }
  const double td = trace.frame().t_delay;

  std::vector<Sample> samples;
  samples.reserve(trace.size() + 2);
  for (double t : trace.times()) {
    if (t > horizon) break;
    if (t == td) samples.push_back({t, trace.population_rate_at(t, Side::left)});
    if (t < horizon) samples.push_back({t, trace.population_rate_at(t, Side::right)});
  }
  if (samples.empty() || samples.back().t < horizon) {
    samples.push_back({horizon, trace.population_rate_at(horizon, Side::left)});
  }

  std::vector<double> out;
  int last_sign = 0;
  double last_t = 0.0;
  for (const Sample& s : samples) {
    const int sign = classify(s.rate, options.plateau);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) {
      double lo = last_t;
      double hi = s.t;
      for (int iter = 0; iter < 200 && hi - lo > options.time_tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double rate = trace.population_rate_at(mid, Side::right);
        if ((rate > 0.0 ? 1 : -1) == last_sign) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const double root = hi == lo ? lo : 0.5 * (lo + hi);
      if (root > 0.0 && root < horizon && (out.empty() || root > out.back())) {
        out.push_back(root);
      }
    }
    last_sign = sign;
    last_t = s.t;
  }
  return out;
}

}  // namespace wqed
