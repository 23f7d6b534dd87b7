#include "wqed/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wqed/compensated_sum.hpp"

namespace wqed {

Complex amplitude_series(const DressedFrame& frame, double t) {
  if (t < 0.0) throw std::invalid_argument("amplitude_series: t must be non-negative");
  const double a = frame.decay;
  if (a == 0.0) return {1.0, 0.0};

  const double td = frame.t_delay;
  const double envelope = -a * t;
  const double log_base = std::log(a) + a * td;

  CompensatedSum<Complex> sum;
  sum += Complex{std::exp(envelope), 0.0};
  for (std::size_t n = 1;; ++n) {
    const double nd = static_cast<double>(n);
    const double lag = t - nd * td;
    // (t - n t_d)^n vanishes at the kink and the term is absent beyond it
    if (!(lag > 0.0)) break;
    const double log_mag = nd * (log_base + std::log(lag)) - std::lgamma(nd + 1.0) + envelope;
    sum += std::polar(std::exp(log_mag), nd * frame.chi);
  }
  return sum.value();
}

Complex amplitude_derivative(const DressedFrame& frame, Complex c_now, Complex c_delayed,
                             double t) {
  Complex rate = -frame.decay * c_now;
  if (t >= frame.t_delay) rate += frame.feedback * c_delayed;
  return rate;
}

bool has_bound_state(const DressedFrame& frame, double tol) {
  const double chi = wrap_phase(frame.chi);
  return std::min(chi, kTwoPi - chi) <= tol;
}

double steady_population(const DressedFrame& frame) {
  if (frame.decay == 0.0) return 1.0;
  if (!has_bound_state(frame)) return 0.0;
  const double residue = 1.0 / (1.0 + frame.decay * frame.t_delay);
  return residue * residue;
}

std::vector<double> delay_aligned_grid(double t_delay, std::size_t points_per_delay,
                                       double horizon) {
  if (!(t_delay > 0.0) || !(horizon > 0.0) || points_per_delay == 0) {
    throw std::invalid_argument("delay_aligned_grid: invalid grid request");
  }
  const double h = t_delay / static_cast<double>(points_per_delay);
  // points closer than this to the horizon are merged into it
  const double snap = 1e-9 * h;

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(horizon / h) + 2);
  for (std::size_t n = 0;; ++n) {
    const double base = static_cast<double>(n) * t_delay;
    for (std::size_t j = 0; j < points_per_delay; ++j) {
      const double t = j == 0 ? base : base + static_cast<double>(j) * h;
      if (t >= horizon - snap) {
        grid.push_back(horizon);
        return grid;
      }
      grid.push_back(t);
    }
  }
}

AmplitudeTrace::AmplitudeTrace(DressedFrame frame, AmplitudeMethod method,
                               std::size_t points_per_delay, std::vector<double> times,
                               std::vector<Complex> values, std::vector<Complex> derivatives)
    : frame_(frame),
      method_(method),
      points_per_delay_(points_per_delay),
      times_(std::move(times)),
      values_(std::move(values)),
      derivatives_(std::move(derivatives)) {
  if (times_.size() < 2 || values_.size() != times_.size() ||
      derivatives_.size() != times_.size()) {
    throw std::invalid_argument("AmplitudeTrace: inconsistent sample arrays");
  }
}

Complex AmplitudeTrace::left_derivative(std::size_t index) const {
  // c is C^0 at t_d and C^1 at every later multiple, so only t_d has a
  // one-sided slope that differs from the stored right limit.
  if (times_[index] == frame_.t_delay) return -frame_.decay * values_[index];
  return derivatives_[index];
}

Complex AmplitudeTrace::interpolate(std::size_t cell, double t) const {
  const double t0 = times_[cell];
  const double t1 = times_[cell + 1];
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * values_[cell] + h10 * h * derivatives_[cell] + h01 * values_[cell + 1] +
         h11 * h * left_derivative(cell + 1);
}

Complex AmplitudeTrace::value_at(double t) const {
  if (t < 0.0 || t > horizon()) {
    throw std::out_of_range("AmplitudeTrace: query outside [0, horizon]");
  }
  if (method_ == AmplitudeMethod::series) return amplitude_series(frame_, t);

  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  if (it == times_.end()) return values_.back();
  const auto cell = static_cast<std::size_t>(std::distance(times_.begin(), it)) - 1;
  if (t == times_[cell]) return values_[cell];
  return interpolate(cell, t);
}

Complex AmplitudeTrace::derivative_at(double t, Side side) const {
  const Complex now = value_at(t);
  const bool gated = side == Side::right ? t >= frame_.t_delay : t > frame_.t_delay;
  if (!gated) return -frame_.decay * now;
  return amplitude_derivative(frame_, now, value_at(t - frame_.t_delay), t);
}

double AmplitudeTrace::population_rate_at(double t, Side side) const {
  return 2.0 * std::real(std::conj(value_at(t)) * derivative_at(t, side));
}

std::vector<double> AmplitudeTrace::kinks() const {
  std::vector<double> out;
  for (std::size_t n = 1;; ++n) {
    const double t = static_cast<double>(n) * frame_.t_delay;
    if (t >= horizon()) break;
    out.push_back(t);
  }
  return out;
}

AmplitudeTrace amplitude_trace(const DressedFrame& frame, double horizon,
                               std::size_t points_per_delay) {
  if (points_per_delay < kMinPointsPerDelay) {
    throw std::invalid_argument("amplitude_trace: need at least 100 points per delay");
  }
  std::vector<double> times = delay_aligned_grid(frame.t_delay, points_per_delay, horizon);
  std::vector<Complex> values(times.size());
  std::vector<Complex> derivatives(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    values[i] = amplitude_series(frame, times[i]);
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const Complex delayed =
        t >= frame.t_delay ? amplitude_series(frame, t - frame.t_delay) : Complex{};
    derivatives[i] = amplitude_derivative(frame, values[i], delayed, t);
  }
  return {frame, AmplitudeMethod::series, points_per_delay, std::move(times), std::move(values),
          std::move(derivatives)};
}

AmplitudeTrace amplitude_dde(const DressedFrame& frame, double step, double horizon) {
  if (!(step > 0.0) || !(horizon > 0.0)) {
    throw std::invalid_argument("amplitude_dde: step and horizon must be positive");
  }
  const double ratio = frame.t_delay / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * ratio) {
    throw std::invalid_argument("amplitude_dde: step must divide t_delay exactly");
  }
  if (rounded < static_cast<double>(kMinPointsPerDelay)) {
    throw std::invalid_argument("amplitude_dde: need at least 100 steps per delay");
  }
  const auto n_per_delay = static_cast<std::size_t>(rounded);

  std::vector<double> times = delay_aligned_grid(frame.t_delay, n_per_delay, horizon);
  const std::size_t count = times.size();
  std::vector<Complex> values(count);
  std::vector<Complex> derivatives(count);
  values[0] = 1.0;
  derivatives[0] = -frame.decay;

  const double a = frame.decay;
  const Complex b = frame.feedback;

  // Cubic Hermite on the history cell [i, i+1] at fraction s; the left end
  // of the cell can be t_d itself, whose stored slope is the right limit.
  auto history = [&](std::size_t cell, double s) {
    const double h = times[cell + 1] - times[cell];
    const double s2 = s * s;
    const double s3 = s2 * s;
    const Complex right_end = times[cell + 1] == frame.t_delay ? -a * values[cell + 1]
                                                               : derivatives[cell + 1];
    return (2.0 * s3 - 3.0 * s2 + 1.0) * values[cell] + (s3 - 2.0 * s2 + s) * h * derivatives[cell] +
           (-2.0 * s3 + 3.0 * s2) * values[cell + 1] + (s3 - s2) * h * right_end;
  };

  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double t0 = times[i];
    const double h = times[i + 1] - t0;
    // the gate is fixed per delay segment: the step ending at t_d is pre-kink
    const bool gated = i >= n_per_delay;

    Complex d0, dmid, d1;
    if (gated) {
      const std::size_t cell = i - n_per_delay;
      const double cell_h = times[cell + 1] - times[cell];
      d0 = values[cell];
      dmid = history(cell, 0.5 * h / cell_h);
      d1 = h == cell_h ? values[cell + 1] : history(cell, h / cell_h);
    }
    auto rhs = [&](Complex c, Complex delayed) {
      return gated ? -a * c + b * delayed : -a * c;
    };

    const Complex c0 = values[i];
    const Complex k1 = rhs(c0, d0);
    const Complex k2 = rhs(c0 + 0.5 * h * k1, dmid);
    const Complex k3 = rhs(c0 + 0.5 * h * k2, dmid);
    const Complex k4 = rhs(c0 + h * k3, d1);
    values[i + 1] = c0 + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    // stored slope is the exact right-hand side at the new point
    const double t1 = times[i + 1];
    Complex delayed{};
    if (gated) {
      delayed = d1;
    } else if (t1 >= frame.t_delay) {
      delayed = values[0];
    }
    derivatives[i + 1] = amplitude_derivative(frame, values[i + 1], delayed, t1);
  }

  return {frame, AmplitudeMethod::dde, n_per_delay, std::move(times), std::move(values),
          std::move(derivatives)};
}

}  // namespace wqed
