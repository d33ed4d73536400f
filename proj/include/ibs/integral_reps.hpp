#pragma once

#include "ibs/quadrature.hpp"
#include "ibs/types.hpp"

namespace ibs {

/// S(n,1;x) = int_0^1 Li_{n-1}(x t (1-t)^2) / t dt, n >= 1, |x| <= 27/4
/// (|x| = 27/4 only for n >= 2). Complex x is accepted.
Evaluation quad_polylog_integral(int n, cplx x, const QuadratureSpec& spec = {});

/// Sign of the upper limit of the trigonometric integral.
///   standard: beta = 3 arctan[sqrt3 / (1 - 2 phi)]
///   flipped:  beta = 3 arctan[sqrt3 / (2 phi - 1)]
/// Only `standard` reproduces the series when the log power n - 2 is odd; with
/// it both log arguments stay positive for every real x. For n = 2 only beta^2
/// enters and the two agree.
enum class BetaConvention { standard, flipped };

/// Upper limits of the two-term representation.
struct TwoTermLimits {
  double alpha = 0.0;  // log[(phi^3 + 1)/(phi + 1)^3]
  double beta = 0.0;
  double phi = 0.0;
};

/// Throws unbounded_limit at x = 0 and domain for |x| > 27/4.
TwoTermLimits two_term_limits(double x, BetaConvention convention = BetaConvention::standard);

struct TwoTermParts {
  cplx logarithmic{};     // the integral over [0, alpha]
  cplx trigonometric{};   // the integral over [0, beta]
  double abs_error = 0.0;
  std::uint64_t evaluations = 0;
};

/// The two integrals of the two-term representation, prefactors included,
/// without the cross-check against quad_polylog_integral.
TwoTermParts two_term_parts(int n, double x, const QuadratureSpec& spec = {},
                            BetaConvention convention = BetaConvention::standard);

/// S(n,1;x) for real x, n >= 2, as the sum of two_term_parts. The result is
/// cross-checked against quad_polylog_integral; a disagreement above 1e-8
/// throws branch_failure.
Evaluation quad_two_term_integral(int n, double x, const QuadratureSpec& spec = {});

}  // namespace ibs
