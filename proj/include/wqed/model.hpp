#ifndef WQED_MODEL_HPP
#define WQED_MODEL_HPP

#include <complex>
#include <numbers>

namespace wqed {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle into [0, 2pi).
double wrap_phase(double angle);

/// Which dressed frame to use at the degenerate point Omega = Delta = 0.
///
/// `bare` treats the qubit as undriven (eta = 0, full decay rate Gamma/2).
/// `dressed_limit` takes the Omega -> 0+ limit at Delta = 0 (eta = pi/2),
/// i.e. the branch reached by any nonzero drive at resonance.
enum class ZeroDrive { bare, dressed_limit };

/// Raw model inputs in units of Gamma.
struct PhysicalParams {
  double gamma = 1.0;    // spontaneous emission rate
  double omega = 0.0;    // classical driving strength, >= 0
  double delta = 0.0;    // detuning omega_0 - omega_L
  double phi = 0.0;      // mirror phase, stored in [0, 2pi)
  double t_delay = 2.0;  // photon round-trip time
  double beta = 1.0;     // initial |+> weight
  double tau = 10.0;     // observation horizon
  ZeroDrive zero_drive = ZeroDrive::bare;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

/// Quantities that parameterize the delay equation
///   c'(t) = -A c(t) + A e^{i chi} c(t - t_d) Theta(t - t_d).
struct DressedFrame {
  double eta = 0.0;       // mixing angle
  double omega_ef = 0.0;  // dressed splitting sqrt(Delta^2 + 4 Omega^2)
  double omega_x = 0.0;   // omega_ef - Delta
  double decay = 0.5;     // A = cos^4(eta/2) Gamma/2
  double chi = 0.0;       // feedback phase omega_x t_d + phi, in [0, 2pi)
  std::complex<double> feedback{0.5, 0.0};  // A e^{i chi}
  double t_delay = 2.0;
};

/// Map raw parameters onto the dressed frame. Validates `params`.
DressedFrame derive_frame(const PhysicalParams& params);

/// Position of the qubit in front of the mirror.
struct MirrorGeometry {
  double x0 = 1.0;  // qubit-mirror distance
  double v = 1.0;   // group velocity
  double k0 = 1.0;  // carrier wavevector
};

/// Replace t_delay and phi of `base` by the round-trip values 2 x0 / v and
/// 2 k0 x0 (mod 2pi). Throws std::invalid_argument for non-positive geometry.
PhysicalParams from_geometry(const MirrorGeometry& geometry, PhysicalParams base);

}  // namespace wqed

#endif  // WQED_MODEL_HPP
