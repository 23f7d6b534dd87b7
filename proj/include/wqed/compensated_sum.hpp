#ifndef WQED_COMPENSATED_SUM_HPP
#define WQED_COMPENSATED_SUM_HPP

#include <cmath>
#include <complex>

namespace wqed {

/// Kahan-Babuska (Neumaier) summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum,
/// which is the normal situation for alternating series.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Scalar value) {
    const Scalar t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  Scalar value() const { return sum_ + compensation_; }

 private:
  Scalar sum_{0};
  Scalar compensation_{0};
};

/// Componentwise compensation for complex addends.
template <typename Scalar>
class CompensatedSum<std::complex<Scalar>> {
 public:
  CompensatedSum& operator+=(std::complex<Scalar> value) {
    re_ += value.real();
    im_ += value.imag();
    return *this;
  }

  std::complex<Scalar> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Scalar> re_;
  CompensatedSum<Scalar> im_;
};

}  // namespace wqed

#endif  // WQED_COMPENSATED_SUM_HPP
