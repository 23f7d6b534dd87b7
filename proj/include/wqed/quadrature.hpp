#ifndef WQED_QUADRATURE_HPP
#define WQED_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wqed {

struct QuadratureOptions {
  double rel_tol = 1e-6;
  double abs_tol = 1e-14;
  int max_depth = 40;
  // uniform panels used for the initial estimate of the integral's scale
  int initial_panels = 16;
};

namespace detail {

template <typename F>
double simpson_recurse(const F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with Richardson correction.
/// The absolute target is max(abs_tol, rel_tol * |coarse estimate|), spread
/// over the initial panels in proportion to their width.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, const QuadratureOptions& options = {}) {
  if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: require a <= b");
  if (a == b) return 0.0;

  const int panels = options.initial_panels > 0 ? options.initial_panels : 1;
  const double width = (b - a) / panels;

  struct Panel {
    double a, b, fa, fm, fb, whole;
  };
  double coarse = 0.0;
  double f_left = f(a);
  std::vector<Panel> cells;
  cells.reserve(static_cast<std::size_t>(panels));
  for (int i = 0; i < panels; ++i) {
    const double pa = a + i * width;
    const double pb = i + 1 == panels ? b : a + (i + 1) * width;
    const double fm = f(0.5 * (pa + pb));
    const double fb = f(pb);
    const double whole = (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb);
    cells.push_back({pa, pb, f_left, fm, fb, whole});
    coarse += whole;
    f_left = fb;
  }

  const double target = std::max(options.abs_tol, options.rel_tol * std::abs(coarse));
  double total = 0.0;
  for (const Panel& p : cells) {
    const double share = target * (p.b - p.a) / (b - a);
    total += detail::simpson_recurse(f, p.a, p.b, p.fa, p.fm, p.fb, p.whole, share,
                                     options.max_depth);
  }
  return total;
}

}  // namespace wqed

#endif  // WQED_QUADRATURE_HPP
