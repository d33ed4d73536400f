#include "ibs/integral_reps.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ibs/closed_forms.hpp"
#include "ibs/complex_math.hpp"
#include "ibs/error.hpp"
#include "ibs/polylog.hpp"

namespace ibs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogFloor = -690.7755278982137;  // log(1e-300)
constexpr double kCrossCheckTol = 1e-8;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double sign_power(int e) { return e % 2 == 0 ? 1.0 : -1.0; }

double clamped_log(double v) { return std::max(std::log(std::abs(v)), kLogFloor); }

// log of a real quantity given as a product; negative values take the
// principal branch (+i pi).
cplx signed_log(double log_abs, bool negative) { return {log_abs, negative ? kPi : 0.0}; }

void require_radius(cplx x, bool boundary_ok, const char* what) {
  const double ax = std::abs(x);
  const bool ok = boundary_ok ? ax <= kRadius * (1.0 + 1e-14) : ax < kRadius;
  if (!ok) {
    throw NumericError(ErrorKind::domain, std::string(what) + " requires |x| " + (boundary_ok ? "<=" : "<") +
                                              " 27/4, got |x| = " + std::to_string(ax));
  }
}

}  // namespace

Evaluation quad_polylog_integral(int n, cplx x, const QuadratureSpec& spec) {
  if (n < 1) throw NumericError(ErrorKind::not_applicable, "polylog integral route requires n >= 1");
  Evaluation out;
  out.method = Method::quad_eq22;
  if (x == cplx{}) return out;
  require_radius(x, n >= 2, "polylog integral route");

  const int weight = n - 1;
  const cplx excess = kRadius - x;
  auto integrand = [=](double t) -> cplx {
    const double u = 1.0 - t;
    const double cubic = t * u * u;  // at most 4/27, attained at t = 1/3
    cplx w = x * cubic;
    if (w == cplx{}) return x;
    if (weight >= 2) {
      const double aw = std::abs(w);
      if (aw > 1.0) w /= aw;  // rounding at the boundary
      return li(weight, w) / t;
    }
    // 1 - w = (1 - 3t)^2 (4 - 3t)/4 + (27/4 - x) t (1-t)^2 keeps the double
    // zero at t = 1/3 free of cancellation.
    const double d = 1.0 - 3.0 * t;
    const cplx complement = std::abs(w) < 0.5 ? 1.0 - w : d * d * (4.0 - 3.0 * t) / 4.0 + excess * cubic;
    if (weight == 0) return x * (u * u) / complement;
    if (std::abs(w) < 0.5) return -log1p(-w) / t;
    return -std::log(complement) / t;
  };
  const QuadratureResult r = integrate(integrand, 0.0, 1.0, spec);
  out.value = r.value;
  out.abs_error_est = r.abs_error;
  out.work = r.evaluations;
  out.check_finite();
  return out;
}

TwoTermLimits two_term_limits(double x, BetaConvention convention) {
  if (x == 0.0) throw NumericError(ErrorKind::unbounded_limit, "alpha(x) -> -infinity as x -> 0");
  require_radius(x, true, "two-term representation");
  const CardanoRoot root = phi(x);
  const double psi = root.inv_phi.real();
  const double sqrt3 = std::sqrt(3.0);
  TwoTermLimits lim;
  lim.phi = root.phi.real();
  lim.alpha = std::log1p(-3.0 * psi / ((1.0 + psi) * (1.0 + psi)));
  // sqrt3/(1 - 2phi) = sqrt3 psi/(psi - 2)
  const double b = 3.0 * std::atan(sqrt3 * psi / (psi - 2.0));
  lim.beta = convention == BetaConvention::standard ? b : -b;
  return lim;
}

TwoTermParts two_term_parts(int n, double x, const QuadratureSpec& spec, BetaConvention convention) {
  if (n < 2) throw NumericError(ErrorKind::not_applicable, "two-term route requires n >= 2");
  TwoTermParts parts;
  if (x == 0.0) return parts;
  const TwoTermLimits lim = two_term_limits(x, convention);
  const int power = n - 2;
  const double log_abs_x = std::log(std::abs(x));

  // log[(1/x)(1 - e^u)^3 / e^{2u}]
  auto log_kernel = [=](double u) -> cplx {
    const double em1 = std::expm1(u);
    const bool negative = ((-em1) < 0.0) != (x < 0.0);
    return signed_log(3.0 * clamped_log(em1) - 2.0 * u - log_abs_x, negative);
  };
  // log[(1 + 2cos th)^3 / (2x (1 + cos th))], th = (2v + 2pi)/3.
  auto trig_kernel = [=](double v) -> cplx {
    const double delta = 2.0 * v / 3.0;
    const double half = std::sin(0.5 * delta);
    // 1 + 2cos(2pi/3 + delta) = 2 sin^2(delta/2) - sqrt3 sin(delta)
    const double a = 2.0 * half * half - std::sqrt(3.0) * std::sin(delta);
    const double c = std::cos(0.5 * (2.0 * kPi / 3.0 + delta));
    const double b = 2.0 * c * c;  // 1 + cos th
    const bool negative = (a < 0.0) != (x < 0.0);
    return signed_log(3.0 * clamped_log(a) - clamped_log(2.0 * x * b), negative);
  };

  auto weighted = [power](auto kernel) {
    return [=](double s) -> cplx { return power == 0 ? cplx{s} : s * std::pow(kernel(s), power); };
  };

  const QuadratureResult first = integrate(weighted(log_kernel), 0.0, lim.alpha, spec);
  const QuadratureResult second = integrate(weighted(trig_kernel), 0.0, lim.beta, spec);
  const double c1 = sign_power(n - 1) / factorial(power);
  const double c2 = 4.0 * sign_power(power) / (3.0 * factorial(power));
  parts.logarithmic = c1 * first.value;
  parts.trigonometric = c2 * second.value;
  parts.abs_error = std::abs(c1) * first.abs_error + std::abs(c2) * second.abs_error;
  parts.evaluations = first.evaluations + second.evaluations;
  return parts;
}

Evaluation quad_two_term_integral(int n, double x, const QuadratureSpec& spec) {
  if (n < 2) throw NumericError(ErrorKind::not_applicable, "two-term route requires n >= 2");
  Evaluation out;
  out.method = Method::quad_eq21;
  if (x == 0.0) return out;
  const TwoTermParts parts = two_term_parts(n, x, spec);
  out.value = parts.logarithmic + parts.trigonometric;
  out.abs_error_est = parts.abs_error;
  out.work = parts.evaluations;
  out.check_finite();

  const Evaluation reference = quad_polylog_integral(n, x, spec);
  const double diff = std::abs(out.value - reference.value);
  if (diff > kCrossCheckTol) {
    throw NumericError(ErrorKind::branch_failure,
                       "two-term representation disagrees with the polylog integral by " + std::to_string(diff));
  }
  out.work += reference.work;
  return out;
}

}  // namespace ibs
