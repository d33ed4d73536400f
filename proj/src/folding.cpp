#include "ibs/folding.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ibs/closed_forms.hpp"
#include "ibs/complex_math.hpp"
#include "ibs/error.hpp"
#include "ibs/integral_reps.hpp"
#include "ibs/series.hpp"
#include "ibs/summation.hpp"

namespace ibs {

namespace {

constexpr int kMaxStride = 6;

void require_fold_domain(int m, cplx x) {
  if (m < 1 || m > kMaxStride) throw NumericError(ErrorKind::argument, "folding supports 1 <= m <= 6");
  const double r = std::pow(kRadius, m);
  if (!(std::abs(x) <= r * (1.0 + 1e-14))) {
    throw NumericError(ErrorKind::domain, "folding requires |x| <= (27/4)^" + std::to_string(m) + " = " +
                                              std::to_string(r) + ", got |x| = " + std::to_string(std::abs(x)));
  }
}

Evaluation inner_eval(int n, cplx arg, Method inner, const QuadratureSpec& spec) {
  switch (inner) {
    case Method::closed_form:
      switch (n) {
        case 2: return s21(arg);
        case 1: return s11(arg);
        case 0: return s01(arg);
        default: throw NumericError(ErrorKind::not_applicable, "closed forms exist only for n <= 2");
      }
    case Method::quad_eq22: return quad_polylog_integral(n, arg, spec);
    case Method::direct_sum: return sum_direct(SeriesParams{n, 1, arg}, {1e-15, default_max_terms()});
    default: throw NumericError(ErrorKind::not_applicable, "folding inner route must be closed-form, quad-eq22 or direct-sum");
  }
}

// Drops the imaginary residue of a folded result at real x.
void settle_real(Evaluation& e, cplx x) {
  if (!is_real(x)) return;
  const double residue = std::abs(e.value.imag());
  if (residue > fold_imag_tolerance(e.value)) {
    throw NumericError(ErrorKind::branch_failure,
                       "folded result at real x has imaginary residue " + std::to_string(residue));
  }
  e.discarded_imag = residue;
  e.value = {e.value.real(), 0.0};
}

}  // namespace

double fold_imag_tolerance(cplx value) { return 1e-9 * (1.0 + std::abs(value)); }

std::vector<cplx> fold_arguments(int m, cplx x) {
  std::vector<cplx> args;
  args.reserve(static_cast<std::size_t>(m));
  if (is_real(x)) {
    // Angle of w^j x^(1/m) is pi (2j)/m for x > 0 and pi (2j+1)/m for x < 0.
    const double mag = std::pow(std::abs(x.real()), 1.0 / m);
    const long offset = x.real() < 0.0 ? 1 : 0;
    for (long j = 1; j <= m; ++j) args.push_back(mag * unit_at(2 * j + offset, m));
    return args;
  }
  const double mag = std::pow(std::abs(x), 1.0 / m);
  const double theta = std::arg(x);
  for (int j = 1; j <= m; ++j) args.push_back(std::polar(mag, (theta + 2.0 * std::numbers::pi * j) / m));
  return args;
}

Evaluation fold(int n, int m, cplx x, Method inner, const QuadratureSpec& spec) {
  if (n < 0) throw NumericError(ErrorKind::argument, "n must be non-negative");
  require_fold_domain(m, x);
  Evaluation out;
  out.method = Method::folding;
  if (x == cplx{}) return out;
  if (inner == Method::closed_form && n > 2)
    throw NumericError(ErrorKind::not_applicable, "closed-form inner route requires n <= 2");

  CompensatedSum sum;
  double err = 0.0;
  for (const cplx arg : fold_arguments(m, x)) {
    const Evaluation e = inner_eval(n, arg, inner, spec);
    sum.add(e.value);
    err += e.abs_error_est;
    out.work += e.work;
  }
  const double scale = std::pow(static_cast<double>(m), n - 1);
  out.value = scale * sum.value();
  out.abs_error_est = scale * err;
  out.check_finite();
  settle_real(out, x);
  return out;
}

Evaluation s2m_closed(int m, cplx x) {
  require_fold_domain(m, x);
  Evaluation out;
  out.method = Method::closed_form;
  if (x == cplx{}) return out;

  const double sqrt3 = std::sqrt(3.0);
  CompensatedSum sum;
  double magnitude = 0.0;
  for (const cplx arg : fold_arguments(m, x)) {
    const CardanoRoot root = phi(arg);
    if (!(root.radical_residual() <= radical_tolerance(arg)))
      throw NumericError(ErrorKind::branch_failure, "cube-root branch inconsistent with its radical identity");
    const cplx p = root.phi;
    const cplx a = std::atan(sqrt3 / (2.0 * p - 1.0));
    // (1 + phi^3)/(1 + phi)^3 = 1 - 3 phi/(1 + phi)^2
    const cplx l = log1p(-3.0 * p / ((1.0 + p) * (1.0 + p)));
    const cplx a2 = 6.0 * a * a;
    const cplx l2 = 0.5 * l * l;
    sum.add(a2 - l2);
    magnitude += std::abs(a2) + std::abs(l2);
  }
  out.value = static_cast<double>(m) * sum.value();
  out.abs_error_est = 32.0 * std::numeric_limits<double>::epsilon() * m * magnitude;
  out.work = static_cast<std::uint64_t>(m);
  out.check_finite();
  settle_real(out, x);
  return out;
}

}  // namespace ibs
