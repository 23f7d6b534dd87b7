#ifndef WQED_MC_FUNCTION_HPP
#define WQED_MC_FUNCTION_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wqed {

enum class MetricKind { wigner_yanase, min, max, custom };

/// Morozova-Chentsov function f of a monotone Riemannian metric, together
/// with the induced symmetric weight c(x, y) = 1 / (y f(x / y)).
template <typename Scalar>
class BasicMCFunction {
 public:
  using Function = std::function<Scalar(Scalar)>;

  /// f(t) = (1 + sqrt t)^2 / 4, c(x, y) = 4 / (sqrt x + sqrt y)^2.
  static BasicMCFunction wigner_yanase() {
    return BasicMCFunction(MetricKind::wigner_yanase, "wigner-yanase", [](Scalar t) {
      using std::sqrt;
      const Scalar s = Scalar(1) + sqrt(t);
      return s * s / Scalar(4);
    });
  }

  /// Smallest monotone metric (Bures / SLD), f(t) = 2t / (1 + t).
  static BasicMCFunction minimal() {
    return BasicMCFunction(MetricKind::min, "min",
                           [](Scalar t) { return Scalar(2) * t / (Scalar(1) + t); });
  }

  /// Largest monotone metric, f(t) = (1 + t) / 2.
  static BasicMCFunction maximal() {
    return BasicMCFunction(MetricKind::max, "max",
                           [](Scalar t) { return (Scalar(1) + t) / Scalar(2); });
  }

  /// User-supplied f. Checked for f(1) = 1, the symmetry f(t) = t f(1/t)
  /// and f_min <= f <= f_max on t in {0.1, 0.2, ..., 10}.
  /// Throws std::invalid_argument when a check fails.
  static BasicMCFunction custom(std::string name, Function f) {
    BasicMCFunction metric(MetricKind::custom, std::move(name), std::move(f));
    metric.check_invariants();
    return metric;
  }

  MetricKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  Scalar f(Scalar t) const { return f_(t); }

  /// c(x, y) for x, y > 0.
  Scalar c(Scalar x, Scalar y) const {
    using std::sqrt;
    switch (kind_) {
      case MetricKind::wigner_yanase: {
        const Scalar s = sqrt(x) + sqrt(y);
        return Scalar(4) / (s * s);
      }
      case MetricKind::min:
        return (x + y) / (Scalar(2) * x * y);
      case MetricKind::max:
        return Scalar(2) / (x + y);
      case MetricKind::custom:
        break;
    }
    return Scalar(1) / (y * f_(x / y));
  }

 private:
  BasicMCFunction(MetricKind kind, std::string name, Function f)
      : kind_(kind), name_(std::move(name)), f_(std::move(f)) {}

  void check_invariants() const {
    using std::abs;
    const Scalar tol(1e-12);
    if (!f_ || abs(f_(Scalar(1)) - Scalar(1)) > tol) {
      throw std::invalid_argument("MC function must satisfy f(1) = 1");
    }
    for (int i = 1; i <= 100; ++i) {
      const Scalar t = Scalar(i) / Scalar(10);
      const Scalar value = f_(t);
      if (abs(value - t * f_(Scalar(1) / t)) > tol * (Scalar(1) + abs(value))) {
        throw std::invalid_argument("MC function must satisfy f(t) = t f(1/t)");
      }
      const Scalar lower = Scalar(2) * t / (Scalar(1) + t);
      const Scalar upper = (Scalar(1) + t) / Scalar(2);
      if (value < lower - tol || value > upper + tol) {
        throw std::invalid_argument("MC function must lie between f_min and f_max");
      }
    }
  }

  MetricKind kind_;
  std::string name_;
  Function f_;
};

using MCFunction = BasicMCFunction<double>;

/// c(x, y) of `metric`; throws std::invalid_argument unless x, y > 0.
template <typename Scalar>
Scalar mc_c(const BasicMCFunction<Scalar>& metric, Scalar x, Scalar y) {
  if (!(x > Scalar(0)) || !(y > Scalar(0))) {
    throw std::invalid_argument("mc_c: arguments must be positive");
  }
  return metric.c(x, y);
}

/// Built-in metric by name: "wy" / "wigner-yanase", "min", "max".
inline MCFunction metric_by_name(std::string_view name) {
  if (name == "wy" || name == "wigner-yanase") return MCFunction::wigner_yanase();
  if (name == "min") return MCFunction::minimal();
  if (name == "max") return MCFunction::maximal();
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

}  // namespace wqed

#endif  // WQED_MC_FUNCTION_HPP
