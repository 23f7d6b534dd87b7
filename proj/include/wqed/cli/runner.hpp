#ifndef WQED_CLI_RUNNER_HPP
#define WQED_CLI_RUNNER_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wqed/amplitude.hpp"
#include "wqed/cli/run_config.hpp"
#include "wqed/cli/table.hpp"

namespace wqed::cli {

/// Series and integrated amplitudes disagree beyond the verification bound.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kVerifyTolerance = 1e-6;

/// Scalar outputs of one parameter point.
struct MeasureReport {
  PhysicalParams params;
  double average_speed = 0.0;
  double aleph = 0.0;
  double aleph_total = 0.0;
  double p_tau = 0.0;
  double p_steady = 0.0;
};

/// max over the grid of |c_series - c_dde| at the config's grid density.
double series_dde_discrepancy(const DressedFrame& frame, double horizon, std::size_t grid_n);

MeasureReport measure(const RunConfig& config);

/// Columns t, re_c, im_c, P, V, sigma, R (subset chosen by `outputs`).
/// Throws VerificationError under `verify` when the DDE cross-check fails.
Table run_trace(const RunConfig& config);

/// One row per sweep value, ascending, columns per `outputs`:
/// V_a, aleph, aleph_total, P_tau, P_steady. Points run concurrently;
/// the first failing point (in sweep order) aborts the sweep.
Table run_sweep(const RunConfig& config);

/// Names accepted by `run_preset`.
std::vector<std::string> preset_names();

/// Figure reproduction. `overridden` holds the setting keys the user gave
/// explicitly (e.g. "t-delay", "phi"); overriding a preset's curve-family
/// variable narrows it to that single curve with full report columns.
Table run_preset(std::string_view name, const RunConfig& base,
                 const std::set<std::string>& overridden);

/// Comment lines echoing every run parameter.
std::vector<std::string> parameter_echo(const RunConfig& config, std::string_view command);

}  // namespace wqed::cli

#endif  // WQED_CLI_RUNNER_HPP
