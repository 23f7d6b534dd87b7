#ifndef WQED_TURNING_POINTS_HPP
#define WQED_TURNING_POINTS_HPP

#include <vector>

#include "wqed/amplitude.hpp"

namespace wqed {

struct TurningPointOptions {
  double time_tol = 1e-10;
  // |dP/dt| below this counts as stationary (neither rising nor falling)
  double plateau = 1e-12;
};

/// Times in (0, horizon) where dP/dt changes sign, located by sampling the
/// trace grid (both one-sided slopes at t = t_d) and refined by bisection.
/// A sign change across the t_d jump resolves to t_d itself.
std::vector<double> population_turning_points(const AmplitudeTrace& trace, double horizon,
                                              const TurningPointOptions& options = {});

}  // namespace wqed

#endif  // WQED_TURNING_POINTS_HPP
