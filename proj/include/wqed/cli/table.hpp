#ifndef WQED_CLI_TABLE_HPP
#define WQED_CLI_TABLE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wqed::cli {

inline constexpr std::string_view kVersion = "1.0.0";

/// Column-major numeric table with `#` comment lines. The first column is
/// the abscissa; `plot_columns` names the curves an SVG rendering draws
/// (empty means every other column).
struct Table {
  std::string title;
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> plot_columns;

  bool empty() const { return rows.empty() || columns.empty(); }
  std::size_t column_index(std::string_view name) const;
  std::vector<double> column(std::string_view name) const;

  /// Comments, header row, then one row per line; 17 significant digits.
  std::string to_csv() const;
};

/// %.17g, with "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double value);

/// Write through a sibling temporary file and rename it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace wqed::cli

#endif  // WQED_CLI_TABLE_HPP
