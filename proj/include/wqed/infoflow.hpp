#ifndef WQED_INFOFLOW_HPP
#define WQED_INFOFLOW_HPP

#include <cmath>
#include <vector>

#include "wqed/amplitude.hpp"
#include "wqed/qstate.hpp"
#include "wqed/quadrature.hpp"

namespace wqed {

/// D = 1/2 tr|rho1 - rho2| for qubit states.
template <typename Scalar>
Scalar trace_distance(const Matrix2c<Scalar>& rho1, const Matrix2c<Scalar>& rho2) {
  using std::abs;
  using std::hypot;
  const Matrix2c<Scalar> diff = rho1 - rho2;
  const Scalar a = diff(0, 0).real();
  const Scalar d = diff(1, 1).real();
  const Scalar half_trace = (a + d) / Scalar(2);
  const Scalar radius = hypot((a - d) / Scalar(2), abs(diff(0, 1)));
  return (abs(half_trace + radius) + abs(half_trace - radius)) / Scalar(2);
}

template <typename Scalar>
Scalar trace_distance(const QubitState<Scalar>& s1, const QubitState<Scalar>& s2) {
  return trace_distance<Scalar>(s1.rho, s2.rho);
}

/// D(t) for the optimal pair |+><+|, |-><-|, which equals P(t) = |c(t)|^2.
std::vector<double> optimal_pair_distance(const AmplitudeTrace& trace);

/// sigma(t) = dD/dt = 2 Re(conj(c) c') on the trace grid (right limits).
std::vector<double> sigma_rate(const AmplitudeTrace& trace);

/// |sigma(t)| on the trace grid.
std::vector<double> flow_rate(const AmplitudeTrace& trace);

struct Extremum {
  double time;
  double distance;
};

struct FlowReport {
  double d0 = 1.0;
  double dtau = 1.0;
  double aleph = 0.0;        // backflow: sum of D increases
  double aleph_total = 0.0;  // total variation of D
  std::vector<Extremum> extrema;
};

/// Non-Markovianity and total flow over [0, horizon]. The interval is cut at
/// the refined turning points of D; pieces where sigma at the midpoint
/// exceeds the plateau threshold count as backflow.
FlowReport information_flow(const AmplitudeTrace& trace, double horizon);

inline double non_markovianity(const AmplitudeTrace& trace, double horizon) {
  return information_flow(trace, horizon).aleph;
}

inline double total_flow(const AmplitudeTrace& trace, double horizon) {
  return information_flow(trace, horizon).aleph_total;
}

/// Direct quadrature of |sigma| over [0, horizon], split at delay multiples
/// and turning points. Independent of the variation sum in `total_flow`.
double total_flow_quadrature(const AmplitudeTrace& trace, double horizon,
                             const QuadratureOptions& options = {});

}  // namespace wqed

#endif  // WQED_INFOFLOW_HPP
