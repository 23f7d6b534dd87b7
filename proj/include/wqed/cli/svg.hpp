#ifndef WQED_CLI_SVG_HPP
#define WQED_CLI_SVG_HPP

#include <string>

#include "wqed/cli/table.hpp"

namespace wqed::cli {

/// Standalone SVG line plot: one curve per plot column against the first
/// column, axis labels taken from the column names. Non-finite samples
/// break the curve. Throws std::invalid_argument for an empty table.
std::string render_svg(const Table& table);

}  // namespace wqed::cli

#endif  // WQED_CLI_SVG_HPP
