#pragma once

#include <cstdint>
#include <functional>

#include "ibs/types.hpp"

namespace ibs {

enum class QuadratureRule { nested_embedded, fixed_composite };

struct QuadratureSpec {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_subdivisions = 2000;  // panel count for fixed_composite
  QuadratureRule rule = QuadratureRule::nested_embedded;

  /// Throws NumericError(argument) unless tolerances are positive and
  /// 1 <= max_subdivisions <= 10^4.
  void validate() const;
};

struct QuadratureResult {
  cplx value{};
  double abs_error = 0.0;
  std::uint64_t evaluations = 0;
  int intervals = 0;
};

using Integrand = std::function<cplx(double)>;

/// Integrates f over [a, b] (either orientation) with the rule named in spec.
/// Throws tolerance_not_met when the requested accuracy is not reached.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Gauss-Kronrod 7/15 pair with bisection of the interval carrying the
/// largest error estimate. Deterministic for a fixed spec.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// Gauss-Kronrod 7/15 on `panels` equal panels, panels evaluated with OpenMP.
/// Panel results are reduced in panel order, so the result is bit-identical to
/// integrate_composite_serial. f must be safe to call concurrently.
QuadratureResult integrate_composite(const Integrand& f, double a, double b, int panels);

/// Serial reference for integrate_composite.
QuadratureResult integrate_composite_serial(const Integrand& f, double a, double b, int panels);

}  // namespace ibs
