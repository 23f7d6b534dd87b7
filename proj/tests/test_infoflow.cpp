#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "wqed/geometry.hpp"
#include "wqed/infoflow.hpp"
#include "wqed/turning_points.hpp"

using namespace wqed;

namespace {

constexpr double kPi = std::numbers::pi;
using M2 = Matrix2c<double>;

DressedFrame frame_for(double omega, double delta, double phi, double t_delay) {
  PhysicalParams p;
  p.omega = omega;
  p.delta = delta;
  p.phi = phi;
  p.t_delay = t_delay;
  return derive_frame(p);
}

M2 projector(Complex a, Complex b) {
  Vector2c<double> v;
  v << a, b;
  v.normalize();
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("trace distance of reference pairs") {
  const M2 plus = projector(1.0, 0.0);
  const M2 minus = projector(0.0, 1.0);
  CHECK(trace_distance<double>(plus, minus) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace_distance<double>(plus, plus) == 0.0);
  CHECK(trace_distance<double>(plus, projector(1.0, 1.0)) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  const M2 mixed = M2::Identity() / 2.0;
  CHECK(trace_distance<double>(plus, mixed) == doctest::Approx(0.5).epsilon(1e-15));
  // symmetric
  const M2 a = projector(Complex(0.3, 0.1), 0.7);
  const M2 b = projector(0.2, Complex(-0.5, 0.4));
  CHECK(trace_distance<double>(a, b) == doctest::Approx(trace_distance<double>(b, a)));
}

TEST_CASE("optimal pair distance is the channel image of |+> and |->") {
  const AmplitudeTrace tr = amplitude_trace(frame_for(0.4, 0.2, 1.0, 0.5), 6.0, 200);
  const auto d = optimal_pair_distance(tr);
  M2 plus = M2::Zero();
  plus(0, 0) = 1.0;
  M2 minus = M2::Zero();
  minus(1, 1) = 1.0;
  for (std::size_t i = 0; i < tr.size(); i += 37) {
    const Complex c = tr.values()[i];
    const double direct = trace_distance<double>(apply_channel(plus, c), apply_channel(minus, c));
    CHECK(std::abs(d[i] - direct) < 1e-12);
    CHECK(std::abs(d[i] - std::norm(c)) < 1e-15);
  }
}

TEST_CASE("sigma sign follows the population slope") {
  const AmplitudeTrace tr = amplitude_trace(frame_for(0.0, 0.0, 0.0, 2.0), 10.0, 200);
  const auto sigma = sigma_rate(tr);
  const auto rate = flow_rate(tr);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const double t = tr.times()[i];
    CHECK(rate[i] == std::abs(sigma[i]));
    if (t < 2.0) CHECK(sigma[i] < 0.0);
    // the echo at t_d refills the excited state
    if (t == 2.0) CHECK(sigma[i] > 0.0);
  }
}

TEST_CASE("speed and flow vanish together at the turning points") {
  const AmplitudeTrace tr = amplitude_trace(frame_for(0.0, 0.0, 0.0, 2.0), 10.0, 1000);
  const auto turning = population_turning_points(tr, 10.0);
  REQUIRE_FALSE(turning.empty());
  for (double t : turning) {
    if (t == 2.0) {
      // sign change across the jump rather than a zero
      CHECK(tr.population_rate_at(t, Side::left) < 0.0);
      CHECK(tr.population_rate_at(t, Side::right) > 0.0);
      continue;
    }
    CHECK(std::abs(tr.population_rate_at(t)) < 1e-9);
    CHECK(instantaneous_speed(tr, 1.0, MCFunction::wigner_yanase(), t) < 1e-8);
  }
}

TEST_CASE("monotone decay has no backflow") {
  const AmplitudeTrace tr = amplitude_trace(frame_for(0.0, 0.0, 0.0, 20.0), 10.0, 100);
  const FlowReport r = information_flow(tr, 10.0);
  CHECK(r.aleph == 0.0);
  CHECK(r.extrema.empty());
  CHECK(r.aleph_total == doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-13));
}

TEST_CASE("echo produces backflow") {
  const AmplitudeTrace tr = amplitude_trace(frame_for(0.0, 0.0, 0.0, 2.0), 10.0, 1000);
  const FlowReport r = information_flow(tr, 10.0);
  CHECK(r.aleph > 0.01);
  CHECK_FALSE(r.extrema.empty());
  // first rise starts at t_d
  CHECK(r.extrema.front().time == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.extrema.front().distance == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("flow decomposition on the amplitude test grid") {
  for (double phi : {0.0, kPi / 4, kPi / 2, kPi}) {
    for (double td : {0.2, 2.0}) {
      for (double omega : {0.0, 0.5, 1.0}) {
        for (double delta : {0.0, 1.0}) {
          CAPTURE(phi);
          CAPTURE(td);
          CAPTURE(omega);
          CAPTURE(delta);
          const AmplitudeTrace tr = amplitude_trace(frame_for(omega, delta, phi, td), 10.0, 200);
          const FlowReport r = information_flow(tr, 10.0);
          CHECK(r.d0 == 1.0);
          CHECK(r.aleph >= 0.0);
          CHECK(std::abs(r.aleph_total - (2 * r.aleph + r.d0 - r.dtau)) < 1e-8);
          const double quad = total_flow_quadrature(tr, 10.0);
          CHECK(std::abs(quad - r.aleph_total) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("flow over a partial horizon") {
  const AmplitudeTrace tr = amplitude_trace(frame_for(0.0, 0.0, 0.0, 2.0), 10.0, 200);
  const FlowReport r = information_flow(tr, 3.0);
  CHECK(r.dtau == doctest::Approx(tr.population_at(3.0)).epsilon(1e-14));
  CHECK(non_markovianity(tr, 3.0) == r.aleph);
  CHECK(total_flow(tr, 3.0) == r.aleph_total);
  CHECK_THROWS_AS(information_flow(tr, 11.0), std::invalid_argument);
  CHECK_THROWS_AS(total_flow_quadrature(tr, 11.0), std::invalid_argument);
}
