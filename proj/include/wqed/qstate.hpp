#ifndef WQED_QSTATE_HPP
#define WQED_QSTATE_HPP

#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace wqed {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Vector2c = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

/// How the single-excitation channel carries the initial coherence.
/// `complex_amplitude` propagates it with c(t); `real_magnitude` uses |c(t)|,
/// which is the real-valued off-diagonal sqrt(P) form.
enum class Coherence { complex_amplitude, real_magnitude };

/// Reduced qubit density matrix in the dressed basis {|+>, |->}.
template <typename Scalar>
struct QubitState {
  Matrix2c<Scalar> rho = Matrix2c<Scalar>::Identity() / Scalar(2);
  Scalar time = 0;
};

/// Eigen-system of a qubit state with p_plus >= p_minus.
/// Eigenvector gauge: first nonzero component real and positive.
template <typename Scalar>
struct SpectralDecomp {
  Scalar p_plus = 0;
  Scalar p_minus = 0;
  Vector2c<Scalar> v_plus = Vector2c<Scalar>::UnitX();
  Vector2c<Scalar> v_minus = Vector2c<Scalar>::UnitY();

  Matrix2c<Scalar> basis() const {
    Matrix2c<Scalar> u;
    u.col(0) = v_plus;
    u.col(1) = v_minus;
    return u;
  }
};

/// Push a general initial state through the vacuum single-excitation
/// channel: rho_11 -> |c|^2 rho_11, rho_12 -> c rho_12.
template <typename Scalar>
Matrix2c<Scalar> apply_channel(const Matrix2c<Scalar>& rho0, std::complex<Scalar> c,
                               Coherence coherence = Coherence::complex_amplitude) {
  using std::abs;
  const Scalar population = std::norm(c);
  const std::complex<Scalar> carrier =
      coherence == Coherence::complex_amplitude ? c : std::complex<Scalar>(abs(c), 0);
  const Scalar excited = population * rho0(0, 0).real();
  Matrix2c<Scalar> rho;
  rho(0, 0) = excited;
  rho(1, 1) = Scalar(1) - excited;
  rho(0, 1) = carrier * rho0(0, 1);
  rho(1, 0) = std::conj(rho(0, 1));
  return rho;
}

/// State at amplitude c for the initial pure state beta|+> + sqrt(1-beta^2)|->.
template <typename Scalar>
QubitState<Scalar> evolve_state(Scalar beta, std::complex<Scalar> c, Scalar time = 0,
                                 Coherence coherence = Coherence::complex_amplitude) {
  using std::sqrt;
  const Scalar coherence_weight = beta * sqrt(Scalar(1) - beta * beta);
  Matrix2c<Scalar> rho0;
  rho0(0, 0) = beta * beta;
  rho0(1, 1) = Scalar(1) - beta * beta;
  rho0(0, 1) = coherence_weight;
  rho0(1, 0) = coherence_weight;
  return {apply_channel(rho0, c, coherence), time};
}

/// d(rho)/dt along the channel for the beta family; Hermitian and traceless.
template <typename Scalar>
Matrix2c<Scalar> state_derivative(Scalar beta, std::complex<Scalar> c, std::complex<Scalar> cdot,
                                  Coherence coherence = Coherence::complex_amplitude) {
  using std::abs;
  using std::sqrt;
  const Scalar coherence_weight = beta * sqrt(Scalar(1) - beta * beta);
  const Scalar pdot = Scalar(2) * std::real(std::conj(c) * cdot);

  std::complex<Scalar> offdiag = cdot;
  if (coherence == Coherence::real_magnitude) {
    const Scalar magnitude = abs(c);
    // d|c|/dt; at a node of c the one-sided rate is |c'|
    offdiag = magnitude > Scalar(0) ? std::complex<Scalar>(pdot / (Scalar(2) * magnitude), 0)
                                    : std::complex<Scalar>(abs(cdot), 0);
  }

  Matrix2c<Scalar> rhodot;
  rhodot(0, 0) = beta * beta * pdot;
  rhodot(1, 1) = -rhodot(0, 0);
  rhodot(0, 1) = coherence_weight * offdiag;
  rhodot(1, 0) = std::conj(rhodot(0, 1));
  return rhodot;
}

namespace detail {

template <typename Scalar>
Vector2c<Scalar> fix_gauge(Vector2c<Scalar> v) {
  using std::abs;
  const std::size_t lead = abs(v(0)) > Scalar(0) ? 0 : 1;
  const Scalar magnitude = abs(v(lead));
  if (magnitude > Scalar(0)) v *= std::conj(v(lead)) / magnitude;
  v(lead) = std::complex<Scalar>(v(lead).real(), 0);
  return v;
}

}  // namespace detail

/// Closed-form Hermitian 2x2 eigen-decomposition.
template <typename Scalar>
SpectralDecomp<Scalar> spectral_decompose(const Matrix2c<Scalar>& rho) {
  using std::abs;
  using std::hypot;
  const Scalar a = rho(0, 0).real();
  const Scalar d = rho(1, 1).real();
  const std::complex<Scalar> b = (rho(0, 1) + std::conj(rho(1, 0))) / Scalar(2);
  const Scalar trace = a + d;
  const Scalar lambda = hypot(a - d, Scalar(2) * abs(b));

  SpectralDecomp<Scalar> out;
  out.p_plus = (trace + lambda) / Scalar(2);
  // the small eigenvalue from det / p_plus keeps relative accuracy near purity
  const Scalar det = a * d - std::norm(b);
  out.p_minus = out.p_plus > Scalar(0) ? det / out.p_plus : (trace - lambda) / Scalar(2);

  if (lambda < Scalar(1e-14)) return out;

  Vector2c<Scalar> v;
  if (a >= d) {
    v << std::complex<Scalar>(out.p_plus - d), std::conj(b);
  } else {
    v << b, std::complex<Scalar>(out.p_plus - a);
  }
  v.normalize();
  out.v_plus = detail::fix_gauge<Scalar>(v);
  Vector2c<Scalar> w;
  w << -std::conj(out.v_plus(1)), std::conj(out.v_plus(0));
  out.v_minus = detail::fix_gauge<Scalar>(w);
  return out;
}

template <typename Scalar>
SpectralDecomp<Scalar> spectral_decompose(const QubitState<Scalar>& state) {
  return spectral_decompose<Scalar>(state.rho);
}

}  // namespace wqed

#endif  // WQED_QSTATE_HPP
