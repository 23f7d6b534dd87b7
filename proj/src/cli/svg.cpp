#include "wqed/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wqed::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
constexpr const char* kDashes[] = {"", "6,4", "2,3", "8,3,2,3"};

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

std::string tick_label(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", std::abs(value) < 1e-12 ? 0.0 : value);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

/// Round step (1, 2 or 5 times a power of ten) giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double residual = raw / magnitude;
  if (residual < 1.5) return magnitude;
  if (residual < 3.5) return 2.0 * magnitude;
  if (residual < 7.5) return 5.0 * magnitude;
  return 10.0 * magnitude;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void settle() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      const double pad = std::max(1e-3, 0.05 * std::abs(hi));
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string render_svg(const Table& table) {
  if (table.empty()) throw std::invalid_argument("render_svg: table is empty");

  std::vector<std::size_t> curves;
  if (table.plot_columns.empty()) {
    for (std::size_t i = 1; i < table.columns.size(); ++i) curves.push_back(i);
  } else {
    for (const auto& name : table.plot_columns) curves.push_back(table.column_index(name));
  }
  if (curves.empty()) throw std::invalid_argument("render_svg: nothing to plot");

  Range xr;
  Range yr;
  for (const auto& row : table.rows) {
    xr.add(row[0]);
    for (std::size_t c : curves) yr.add(row[c]);
  }
  xr.settle();
  yr.settle();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!table.title.empty()) {
    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" " +
           "font-family=\"sans-serif\" font-size=\"15\">" + escape(table.title) + "</text>\n";
  }
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const double xstep = nice_step(xr.hi - xr.lo, 6);
  for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xstep; x += xstep) {
    svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
           num(px(x)) + "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + tick_label(x) + "</text>\n";
  }
  const double ystep = nice_step(yr.hi - yr.lo, 5);
  for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi + 1e-9 * ystep; y += ystep) {
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(py(y)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(y) + 4) +
           "\" text-anchor=\"end\">" + tick_label(y) + "</text>\n";
  }
  svg += "</g>\n";

  const std::string ylabel = curves.size() == 1 ? table.columns[curves[0]] : "value";
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 15) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(table.columns[0]) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" " +
         "transform=\"rotate(-90 18 " + num(kTop + plot_h / 2) + ")\">" + escape(ylabel) +
         "</text>\n";

  for (std::size_t k = 0; k < curves.size(); ++k) {
    const std::size_t c = curves[k];
    const std::string color = kPalette[k % std::size(kPalette)];
    const std::string dash = kDashes[k % std::size(kDashes)];
    std::string points;
    auto flush = [&]() {
      if (points.empty()) return;
      svg += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.6\"";
      if (!dash.empty()) svg += " stroke-dasharray=\"" + dash + "\"";
      svg += " points=\"" + points + "\"/>\n";
      points.clear();
    };
    for (const auto& row : table.rows) {
      if (!std::isfinite(row[0]) || !std::isfinite(row[c])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += num(px(row[0])) + "," + num(py(row[c]));
    }
    flush();

    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(k);
    const double lx = kLeft + plot_w + 12.0;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) +
           "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.6\"";
    if (!dash.empty()) svg += " stroke-dasharray=\"" + dash + "\"";
    svg += "/>\n";
    svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(table.columns[c]) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace wqed::cli
