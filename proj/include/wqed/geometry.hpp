#ifndef WQED_GEOMETRY_HPP
#define WQED_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <complex>

#include "wqed/amplitude.hpp"
#include "wqed/mc_function.hpp"
#include "wqed/qstate.hpp"
#include "wqed/quadrature.hpp"

namespace wqed {

/// Eigenvalues are floored here before entering c(x, y).
inline constexpr double kEigenvalueFloor = 1e-15;

/// Instantaneous speed sqrt(g^f(rhodot, rhodot)) in the superoperator form
///   V^2 = 1/4 sum_{k,l} c(p_k, p_l) |<v_k| rhodot |v_l>|^2.
/// Gauge invariant and finite at spectral degeneracy.
template <typename Scalar>
Scalar metric_speed(const SpectralDecomp<Scalar>& decomp, const Matrix2c<Scalar>& rhodot,
                    const BasicMCFunction<Scalar>& metric) {
  using std::max;
  using std::sqrt;
  const Matrix2c<Scalar> u = decomp.basis();
  const Matrix2c<Scalar> m = u.adjoint() * rhodot * u;
  const Scalar floor(kEigenvalueFloor);
  const Scalar p[2] = {max(decomp.p_plus, floor), max(decomp.p_minus, floor)};

  Scalar v2(0);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      v2 += metric.c(p[k], p[l]) * std::norm(m(k, l));
    }
  }
  return sqrt(max(v2, Scalar(0)) / Scalar(4));
}

/// The same speed written through eigenvalue rates and eigenvector motion:
///   V^2 = sum_k pdot_k^2 / (4 p_k)
///       + sum_{k != l} c(p_k, p_l) p_k (p_k - p_l) / 2 |<v_l | d v_k>|^2,
/// with |<v_l | d v_k>| = |<v_l| rhodot |v_k>| / |p_k - p_l|.
/// Requires a nondegenerate spectrum.
template <typename Scalar>
Scalar metric_speed_spectral_form(const SpectralDecomp<Scalar>& decomp,
                                  const Matrix2c<Scalar>& rhodot,
                                  const BasicMCFunction<Scalar>& metric) {
  using std::max;
  using std::sqrt;
  const Matrix2c<Scalar> u = decomp.basis();
  const Matrix2c<Scalar> m = u.adjoint() * rhodot * u;
  const Scalar floor(kEigenvalueFloor);
  const Scalar p[2] = {max(decomp.p_plus, floor), max(decomp.p_minus, floor)};

  Scalar v2(0);
  for (int k = 0; k < 2; ++k) {
    const Scalar pdot = m(k, k).real();
    v2 += pdot * pdot / (Scalar(4) * p[k]);
  }
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      if (k == l) continue;
      const Scalar gap = p[k] - p[l];
      const Scalar overlap = std::norm(m(l, k)) / (gap * gap);
      v2 += metric.c(p[k], p[l]) * p[k] * gap / Scalar(2) * overlap;
    }
  }
  return sqrt(max(v2, Scalar(0)));
}

struct SpeedOptions {
  Coherence coherence = Coherence::complex_amplitude;
  QuadratureOptions quadrature{};
};

/// V(t) of the beta family along `trace`. `side` selects the one-sided
/// slope at t = t_d.
double instantaneous_speed(const AmplitudeTrace& trace, double beta, const MCFunction& metric,
                           double t, Side side = Side::right,
                           Coherence coherence = Coherence::complex_amplitude);

/// (1 / tau) * integral of V over [0, tau]. The first delay segment is
/// integrated in u = sqrt(t) to absorb the t^{-1/2} endpoint singularity;
/// later segments are split at delay multiples and at turning points of P.
/// Throws std::invalid_argument when tau exceeds the trace horizon.
double average_speed(const AmplitudeTrace& trace, double beta, const MCFunction& metric,
                     double tau, const SpeedOptions& options = {});

}  // namespace wqed

#endif  // WQED_GEOMETRY_HPP
