#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include "wqed/amplitude.hpp"
#include "wqed/mc_function.hpp"
#include "wqed/qstate.hpp"

using namespace wqed;

namespace {

using M2 = Matrix2c<double>;

M2 random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  // Bloch vector inside the ball
  double x, y, z;
  do {
    x = u(rng);
    y = u(rng);
    z = u(rng);
  } while (x * x + y * y + z * z >= 1.0);
  M2 rho;
  rho << Complex(0.5 * (1 + z), 0), Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y),
      Complex(0.5 * (1 - z), 0);
  return rho;
}

}  // namespace

TEST_CASE("evolved state for the reference amplitude") {
  const double beta = std::sqrt(0.5);
  const auto s = evolve_state(beta, Complex(std::sqrt(0.5), 0.0), 1.0);
  CHECK(s.rho(0, 0).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.rho(1, 1).real() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(s.rho(0, 1).real() == doctest::Approx(0.353553390593273762).epsilon(1e-15));
  CHECK(s.rho(1, 0) == std::conj(s.rho(0, 1)));
  CHECK(s.time == 1.0);

  const SpectralDecomp<double> d = spectral_decompose(s);
  CHECK(d.p_plus - d.p_minus == doctest::Approx(0.866025403784438647).epsilon(1e-14));
  CHECK(d.p_plus == doctest::Approx(0.933012701892219323).epsilon(1e-14));

  Eigen::SelfAdjointEigenSolver<M2> solver(s.rho);
  CHECK(d.p_minus == doctest::Approx(solver.eigenvalues()(0)).epsilon(1e-13));
  CHECK(d.p_plus == doctest::Approx(solver.eigenvalues()(1)).epsilon(1e-13));
}

TEST_CASE("maximally mixed state keeps the canonical basis") {
  const SpectralDecomp<double> d = spectral_decompose(M2(M2::Identity() / 2.0));
  CHECK(d.p_plus == doctest::Approx(0.5));
  CHECK(d.p_minus == doctest::Approx(0.5));
  CHECK(d.v_plus == Vector2c<double>::UnitX());
  CHECK(d.v_minus == Vector2c<double>::UnitY());
}

TEST_CASE("spectral decomposition reconstructs random states") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const M2 rho = random_state(rng);
    const SpectralDecomp<double> d = spectral_decompose(rho);
    CHECK(d.p_plus >= d.p_minus);
    const M2 u = d.basis();
    CHECK((u.adjoint() * u - M2::Identity()).norm() < 1e-12);
    M2 diag = M2::Zero();
    diag(0, 0) = d.p_plus;
    diag(1, 1) = d.p_minus;
    CHECK((u * diag * u.adjoint() - rho).norm() < 1e-12);
    // gauge: leading component real and non-negative
    CHECK(std::abs(d.v_plus(0).imag()) < 1e-15);
    CHECK(d.v_plus(0).real() >= 0.0);
  }
}

TEST_CASE("small eigenvalue keeps relative accuracy near purity") {
  const double eps = 1e-13;
  M2 rho;
  rho << Complex(1.0 - eps, 0), Complex(0, 0), Complex(0, 0), Complex(eps, 0);
  const SpectralDecomp<double> d = spectral_decompose(rho);
  CHECK(d.p_minus == doctest::Approx(eps).epsilon(1e-6));
}

TEST_CASE("state derivative matches a finite difference along a trace") {
  PhysicalParams p;
  p.omega = 0.6;
  p.delta = 0.4;
  p.phi = 1.2;
  p.t_delay = 0.8;
  const DressedFrame f = derive_frame(p);
  const AmplitudeTrace tr = amplitude_trace(f, 6.0, 400);
  const double h = 1e-4;
  for (double beta : {1.0, 0.8, std::sqrt(0.5)}) {
    for (Coherence mode : {Coherence::complex_amplitude, Coherence::real_magnitude}) {
      for (double t : {0.3, 1.1, 2.5, 4.9}) {
        const M2 analytic = state_derivative(beta, tr.value_at(t), tr.derivative_at(t), mode);
        const M2 fd = (evolve_state(beta, tr.value_at(t + h), 0.0, mode).rho -
                       evolve_state(beta, tr.value_at(t - h), 0.0, mode).rho) /
                      (2 * h);
        CHECK((analytic - fd).norm() < 1e-6);
        CHECK(std::abs(analytic.trace()) < 1e-15);
        CHECK((analytic - analytic.adjoint()).norm() < 1e-15);
      }
    }
  }
}

TEST_CASE("evolved states stay physical") {
  PhysicalParams p;
  p.omega = 0.3;
  p.phi = 2.0;
  p.t_delay = 0.2;
  const AmplitudeTrace tr = amplitude_trace(derive_frame(p), 10.0, 100);
  for (double beta : {0.0, 0.3, 1.0}) {
    for (const Complex& c : tr.values()) {
      const auto s = evolve_state(beta, c);
      CHECK(std::abs(s.rho.trace() - 1.0) < 1e-15);
      const SpectralDecomp<double> d = spectral_decompose(s);
      CHECK(d.p_minus >= -1e-15);
    }
  }
}

TEST_CASE("real-coherence mode uses |c|") {
  const Complex c(0.0, 0.6);
  const auto a = evolve_state(1.0 / std::sqrt(2.0), c, 0.0, Coherence::complex_amplitude);
  const auto b = evolve_state(1.0 / std::sqrt(2.0), c, 0.0, Coherence::real_magnitude);
  CHECK(std::abs(a.rho(0, 1) - Complex(0.0, 0.3)) < 1e-15);
  CHECK(std::abs(b.rho(0, 1) - Complex(0.3, 0.0)) < 1e-15);
  CHECK(a.rho(0, 0) == b.rho(0, 0));
}

TEST_CASE("Wigner-Yanase weight") {
  const MCFunction wy = MCFunction::wigner_yanase();
  CHECK(wy.c(0.25, 0.75) == doctest::Approx(2.14359353944898165).epsilon(1e-14));
  CHECK(mc_c(wy, 0.25, 0.75) == doctest::Approx(2.14359353944898165).epsilon(1e-14));
  CHECK_THROWS_AS(mc_c(wy, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("built-in MC functions satisfy the defining properties") {
  for (const MCFunction& m : {MCFunction::wigner_yanase(), MCFunction::minimal(),
                               MCFunction::maximal()}) {
    CAPTURE(m.name());
    CHECK(m.f(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double t = 0.01; t < 100.0; t *= 1.37) {
      CHECK(m.f(t) == doctest::Approx(t * m.f(1.0 / t)).epsilon(1e-13));
      CHECK(m.f(t) >= 2 * t / (1 + t) - 1e-14);
      CHECK(m.f(t) <= (1 + t) / 2 + 1e-14);
    }
    for (double x : {0.01, 0.2, 0.5, 0.9}) {
      for (double y : {0.03, 0.4, 0.7}) {
        CHECK(m.c(x, y) == doctest::Approx(1.0 / (y * m.f(x / y))).epsilon(1e-13));
        CHECK(m.c(x, y) == doctest::Approx(m.c(y, x)).epsilon(1e-14));
      }
      CHECK(m.c(x, x) == doctest::Approx(1.0 / x).epsilon(1e-14));
    }
  }
}

TEST_CASE("custom MC functions are validated") {
  // Kubo-Mori: (t - 1) / log t
  const auto km = MCFunction::custom("kubo-mori", [](double t) {
    return std::abs(t - 1.0) < 1e-9 ? 1.0 : (t - 1.0) / std::log(t);
  });
  CHECK(km.kind() == MetricKind::custom);
  CHECK(km.c(0.3, 0.3) == doctest::Approx(1.0 / 0.3));

  CHECK_THROWS_AS(MCFunction::custom("scaled", [](double t) { return 2.0 * (1 + t) / 2; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(MCFunction::custom("asymmetric", [](double t) { return (1 + 2 * t) / 3; }),
                  std::invalid_argument);
  // symmetric and normalised but above f_max
  CHECK_THROWS_AS(MCFunction::custom("too-large",
                                     [](double t) { return (1 + t * t) / (1 + t); }),
                  std::invalid_argument);
}

TEST_CASE("metric lookup by name") {
  CHECK(metric_by_name("wy").kind() == MetricKind::wigner_yanase);
  CHECK(metric_by_name("wigner-yanase").kind() == MetricKind::wigner_yanase);
  CHECK(metric_by_name("min").kind() == MetricKind::min);
  CHECK(metric_by_name("max").kind() == MetricKind::max);
  CHECK_THROWS_AS(metric_by_name("bures"), std::invalid_argument);
}
