#pragma once

#include <cmath>
#include <complex>

namespace ibs {

/// Neumaier's variant of Kahan summation, applied componentwise to a complex
/// accumulator.
class CompensatedSum {
 public:
  void add(std::complex<double> term) noexcept {
    add_component(re_, re_c_, term.real());
    add_component(im_, im_c_, term.imag());
  }

  std::complex<double> value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_component(double& sum, double& comp, double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0, re_c_ = 0.0;
  double im_ = 0.0, im_c_ = 0.0;
};

}  // namespace ibs
