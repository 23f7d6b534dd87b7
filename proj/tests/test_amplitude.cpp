#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "wqed/amplitude.hpp"

using namespace wqed;

namespace {

constexpr double kPi = std::numbers::pi;

DressedFrame frame_for(double omega, double delta, double phi, double t_delay,
                       double gamma = 1.0) {
  PhysicalParams p;
  p.gamma = gamma;
  p.omega = omega;
  p.delta = delta;
  p.phi = phi;
  p.t_delay = t_delay;
  return derive_frame(p);
}

// A = 0.5, t_d = 2, chi = 0
DressedFrame bare_frame(double phi = 0.0) { return frame_for(0.0, 0.0, phi, 2.0); }

double max_abs_diff(const AmplitudeTrace& a, const AmplitudeTrace& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.times()[i] == doctest::Approx(b.times()[i]).epsilon(1e-14));
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("series reproduces the reference amplitudes") {
  const DressedFrame f = bare_frame();
  // e^{-1/2}
  const Complex c1 = amplitude_series(f, 1.0);
  CHECK(c1.real() == doctest::Approx(0.606530659712633424).epsilon(1e-14));
  CHECK(std::abs(c1.imag()) < 1e-16);
  // e^{-3/2} + 0.5 e^{-1/2}, evaluated to 30 digits
  const Complex c3 = amplitude_series(f, 3.0);
  CHECK(c3.real() == doctest::Approx(0.526395490004746541).epsilon(1e-14));
  CHECK(std::abs(c3.imag()) < 1e-16);
  CHECK(amplitude_series(f, 0.0) == Complex(1.0, 0.0));
}

TEST_CASE("series adds the feedback term with phase chi") {
  const DressedFrame f = bare_frame(kPi / 2);
  const double t = 3.0;
  const Complex expected = std::exp(-0.5 * t) + Complex(0, 0.5) * std::exp(-0.5) * (t - 2.0);
  CHECK(std::abs(amplitude_series(f, t) - expected) < 1e-15);
}

TEST_CASE("derivative uses the post-kink slope at t_d") {
  const DressedFrame f = bare_frame();
  const Complex c_td = amplitude_series(f, 2.0);
  const Complex d = amplitude_derivative(f, c_td, Complex(1.0, 0.0), 2.0);
  // -0.5 e^{-1} + 0.5
  CHECK(d.real() == doctest::Approx(0.316060279414278839).epsilon(1e-14));
  CHECK(std::abs(d.imag()) < 1e-16);

  // right-sided difference quotient of the series
  const double h = 1e-6;
  const Complex fd = (amplitude_series(f, 2.0 + h) - c_td) / h;
  CHECK(std::abs(fd - d) < 1e-6);

  // left of t_d the feedback term is absent
  const Complex before = amplitude_derivative(f, c_td, Complex(1.0, 0.0), 2.0 - 1e-12);
  CHECK(before.real() == doctest::Approx(-0.5 * c_td.real()).epsilon(1e-10));
}

TEST_CASE("derivative with chi = pi doubles the decay of a constant history") {
  const DressedFrame f = bare_frame(kPi);
  const Complex x(0.3, -0.2);
  const Complex d = amplitude_derivative(f, x, x, 5.0);
  CHECK(std::abs(d - (-2.0 * f.decay) * x) < 1e-15);
}

TEST_CASE("steady population") {
  CHECK(steady_population(bare_frame()) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(steady_population(frame_for(0.0, 0.0, 0.0, 0.2)) ==
        doctest::Approx(0.826446280991735404).epsilon(1e-14));
  CHECK(steady_population(bare_frame(kPi / 2)) == 0.0);
  CHECK(has_bound_state(bare_frame()));
  CHECK_FALSE(has_bound_state(bare_frame(1e-6)));
  CHECK(has_bound_state(bare_frame(kTwoPi - 1e-12)));
}

TEST_CASE("steady population is approached for chi = 0") {
  const DressedFrame f = frame_for(0.0, 0.0, 0.0, 0.2);
  CHECK(std::norm(amplitude_series(f, 60.0)) ==
        doctest::Approx(steady_population(f)).epsilon(1e-9));
}

TEST_CASE("delay-aligned grid hits every delay multiple") {
  const auto grid = delay_aligned_grid(2.0, 100, 7.0);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 7.0);
  CHECK(grid.size() == 351);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  for (double m : {2.0, 4.0, 6.0}) {
    CHECK(std::find(grid.begin(), grid.end(), m) != grid.end());
  }
  CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());
}

TEST_CASE("integration of the pure exponential before the first echo") {
  const DressedFrame f = bare_frame(0.7);
  const AmplitudeTrace tr = amplitude_dde(f, 2.0 / 1000, 1.9);
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    worst = std::max(worst, std::abs(tr.values()[i] - std::exp(-0.5 * tr.times()[i])));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("integration agrees with the series") {
  for (double phi : {0.0, kPi}) {
    const DressedFrame f = bare_frame(phi);
    const AmplitudeTrace series = amplitude_trace(f, 10.0, 1000);
    const AmplitudeTrace dde = amplitude_dde(f, 2.0 / 1000, 10.0);
    CHECK(max_abs_diff(series, dde) < 1e-8);
  }
  const DressedFrame driven = frame_for(0.5, 1.0, 0.3, 0.2);
  CHECK(max_abs_diff(amplitude_trace(driven, 10.0, 1000), amplitude_dde(driven, 0.2 / 1000, 10.0)) <
        1e-8);
}

TEST_CASE("integration rejects incommensurate or coarse steps") {
  const DressedFrame f = bare_frame();
  CHECK_THROWS_AS(amplitude_dde(f, 0.03, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_dde(f, 2.0 / 50, 10.0), std::invalid_argument);
  CHECK_NOTHROW(amplitude_dde(f, 2.0 / 100, 10.0));
}

TEST_CASE("interpolated queries of an integrated trace") {
  const DressedFrame f = bare_frame(kPi / 3);
  const AmplitudeTrace dde = amplitude_dde(f, 2.0 / 1000, 7.0);
  for (double t : {0.0, 0.0013, 1.9999, 2.0, 2.0007, 3.14159, 6.9995, 7.0}) {
    CHECK(std::abs(dde.value_at(t) - amplitude_series(f, t)) < 1e-9);
  }
  CHECK(std::abs(dde.derivative_at(2.0, Side::left) - Complex(-0.5, 0) * dde.value_at(2.0)) <
        1e-9);
  CHECK_THROWS(dde.value_at(7.5));
}

TEST_CASE("pre-delay evolution is universal") {
  for (double phi : {0.0, 1.0, kPi}) {
    for (double omega : {0.0, 0.4}) {
      const DressedFrame f = frame_for(omega, 0.3, phi, 2.0);
      for (double t : {0.0, 0.5, 1.3, 1.999}) {
        const double expected = std::exp(-f.decay * t);
        CHECK(std::abs(amplitude_series(f, t) - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("amplitude is continuous across delay multiples") {
  for (double phi : {0.0, 0.9, kPi}) {
    const DressedFrame f = frame_for(0.0, 0.0, phi, 0.2);
    for (int n = 1; n <= 20; ++n) {
      const double t = n * 0.2;
      const Complex left = amplitude_series(f, std::nextafter(t, 0.0));
      const Complex right = amplitude_series(f, t);
      CHECK(std::abs(left - right) < 1e-12);
    }
  }
}

TEST_CASE("amplitude is contractive") {
  for (double phi : {0.0, kPi / 4, kPi / 2, kPi}) {
    for (double td : {0.2, 2.0}) {
      const AmplitudeTrace tr = amplitude_trace(frame_for(0.7, 0.0, phi, td), 20.0, 200);
      for (const Complex& c : tr.values()) CHECK(std::abs(c) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("resonant traces are periodic in Omega with period pi/t_d") {
  for (double td : {0.2, 2.0}) {
    for (double omega : {0.25, 1.1}) {
      const AmplitudeTrace a = amplitude_trace(frame_for(omega, 0.0, 0.5, td), 10.0, 200);
      const AmplitudeTrace b = amplitude_trace(frame_for(omega + kPi / td, 0.0, 0.5, td), 10.0, 200);
      CHECK(max_abs_diff(a, b) < 1e-12);
    }
  }
}

TEST_CASE("one-sided population rates at t_d") {
  const AmplitudeTrace tr = amplitude_trace(bare_frame(), 5.0, 200);
  const double left = tr.population_rate_at(2.0, Side::left);
  const double right = tr.population_rate_at(2.0, Side::right);
  CHECK(left == doctest::Approx(-std::exp(-2.0)).epsilon(1e-12));
  CHECK(right == doctest::Approx(2.0 * std::exp(-1.0) * (-0.5 * std::exp(-1.0) + 0.5)).epsilon(1e-12));
  const auto kinks = tr.kinks();
  REQUIRE(kinks.size() == 2);
  CHECK(kinks[0] == 2.0);
  CHECK(kinks[1] == 4.0);
}

TEST_CASE("undriven decay is unchanged when the rate is rescaled") {
  const DressedFrame a = frame_for(0.0, 0.0, 0.0, 2.0, 1.0);
  const DressedFrame b = frame_for(0.0, 0.0, 0.0, 1.0, 2.0);
  for (double t : {0.5, 2.5, 7.0}) {
    CHECK(std::abs(amplitude_series(a, t) - amplitude_series(b, t / 2)) < 1e-13);
  }
}
