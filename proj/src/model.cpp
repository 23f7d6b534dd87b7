#include "wqed/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wqed {

double wrap_phase(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void PhysicalParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid parameters: ") + what);
  };
  require(std::isfinite(gamma) && gamma > 0.0, "gamma must be positive");
  require(std::isfinite(omega) && omega >= 0.0, "omega must be non-negative");
  require(std::isfinite(delta), "delta must be finite");
  require(std::isfinite(phi), "phi must be finite");
  require(std::isfinite(t_delay) && t_delay > 0.0, "t_delay must be positive");
  require(std::isfinite(beta) && beta >= 0.0 && beta <= 1.0, "beta must lie in [0, 1]");
  require(std::isfinite(tau) && tau > 0.0, "tau must be positive");
}

DressedFrame derive_frame(const PhysicalParams& params) {
  params.validate();

  DressedFrame frame;
  const double two_omega = 2.0 * std::abs(params.omega);
  if (two_omega == 0.0 && params.delta == 0.0) {
    frame.eta = params.zero_drive == ZeroDrive::bare ? 0.0 : std::numbers::pi / 2.0;
  } else {
    frame.eta = std::atan2(two_omega, params.delta);
  }
  frame.omega_ef = std::sqrt(params.delta * params.delta + two_omega * two_omega);
  frame.omega_x = frame.omega_ef - params.delta;

  const double c = std::cos(frame.eta / 2.0);
  frame.decay = c * c * c * c * params.gamma / 2.0;
  frame.chi = wrap_phase(frame.omega_x * params.t_delay + params.phi);
  frame.feedback = std::polar(frame.decay, frame.chi);
  frame.t_delay = params.t_delay;
  return frame;
}

PhysicalParams from_geometry(const MirrorGeometry& geometry, PhysicalParams base) {
  if (!(geometry.x0 > 0.0) || !(geometry.v > 0.0) || !(geometry.k0 > 0.0)) {
    throw std::invalid_argument("mirror geometry requires x0, v, k0 > 0");
  }
  base.t_delay = 2.0 * geometry.x0 / geometry.v;
  base.phi = wrap_phase(2.0 * geometry.k0 * geometry.x0);
  return base;
}

}  // namespace wqed
