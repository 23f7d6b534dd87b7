#ifndef WQED_AMPLITUDE_HPP
#define WQED_AMPLITUDE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "wqed/model.hpp"

namespace wqed {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultPointsPerDelay = 1000;
inline constexpr std::size_t kMinPointsPerDelay = 100;

/// Excited-state amplitude from the finite inverse-Laplace series
///   c(t) = e^{-A t} sum_{n <= t/t_d} (A e^{i chi} e^{A t_d})^n (t - n t_d)^n / n!
/// Terms are formed in log-magnitude/phase and accumulated with
/// compensated summation.
Complex amplitude_series(const DressedFrame& frame, double t);

/// Right-hand side of the delay equation. The gate Theta(t - t_d) uses the
/// right limit Theta(0) = 1, so at t = t_d this is the post-kink slope.
/// `c_delayed` is ignored for t < t_d.
Complex amplitude_derivative(const DressedFrame& frame, Complex c_now, Complex c_delayed,
                             double t);

/// Long-time excited population |c(inf)|^2: the residue of the s = 0 pole
/// 1 / (1 + A t_d)^2 when chi = 0 mod 2pi, otherwise 0.
double steady_population(const DressedFrame& frame);

/// True when chi is within `tol` of a multiple of 2pi.
bool has_bound_state(const DressedFrame& frame, double tol = 1e-9);

enum class AmplitudeMethod { series, dde };

/// One-sided limit used at the derivative jump t = t_d.
enum class Side { left, right };

/// Sampled amplitude on [0, tau]. Grid spacing is t_d / N and every delay
/// multiple n t_d <= tau is a grid point; tau itself is always the last point.
/// Off-grid queries use the series for series traces and piecewise cubic
/// Hermite interpolation for integrated traces.
class AmplitudeTrace {
 public:
  AmplitudeTrace(DressedFrame frame, AmplitudeMethod method, std::size_t points_per_delay,
                 std::vector<double> times, std::vector<Complex> values,
                 std::vector<Complex> derivatives);

  const DressedFrame& frame() const { return frame_; }
  AmplitudeMethod method() const { return method_; }
  std::size_t points_per_delay() const { return points_per_delay_; }
  double horizon() const { return times_.back(); }
  std::size_t size() const { return times_.size(); }

  const std::vector<double>& times() const { return times_; }
  const std::vector<Complex>& values() const { return values_; }
  /// Right-limit derivatives (post-kink slope at t = t_d).
  const std::vector<Complex>& derivatives() const { return derivatives_; }

  Complex value_at(double t) const;
  Complex derivative_at(double t, Side side = Side::right) const;
  double population_at(double t) const { return std::norm(value_at(t)); }
  /// dP/dt = 2 Re(conj(c) c').
  double population_rate_at(double t, Side side = Side::right) const;

  /// Interior delay multiples n t_d in (0, horizon).
  std::vector<double> kinks() const;

 private:
  Complex interpolate(std::size_t cell, double t) const;
  Complex left_derivative(std::size_t index) const;

  DressedFrame frame_;
  AmplitudeMethod method_;
  std::size_t points_per_delay_;
  std::vector<double> times_;
  std::vector<Complex> values_;
  std::vector<Complex> derivatives_;
};

/// Grid t = n t_d + j t_d / N up to `horizon`, closed by `horizon` itself.
std::vector<double> delay_aligned_grid(double t_delay, std::size_t points_per_delay,
                                       double horizon);

/// Trace built from `amplitude_series` with exact derivatives.
AmplitudeTrace amplitude_trace(const DressedFrame& frame, double horizon,
                               std::size_t points_per_delay = kDefaultPointsPerDelay);

/// Method-of-steps RK4 integration with step `step`, which must divide t_d
/// into at least 100 equal parts. Delayed values are read by cubic Hermite
/// interpolation of the previous delay segment. Throws std::invalid_argument.
AmplitudeTrace amplitude_dde(const DressedFrame& frame, double step, double horizon);

}  // namespace wqed

#endif  // WQED_AMPLITUDE_HPP
