#include "ibs/polylog.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ibs/complex_math.hpp"
#include "ibs/error.hpp"
#include "ibs/summation.hpp"

namespace ibs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRimSlack = 1e-12;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void PolylogQuery::validate() const {
  if (n < 0) throw NumericError(ErrorKind::argument, "polylog weight must be non-negative");
  const double az = std::abs(z);
  if (!(az <= 1.0 + kRimSlack))
    throw NumericError(ErrorKind::domain, "polylog requires |z| <= 1, got |z| = " + std::to_string(az));
  if (n == 0 && az >= 1.0) throw NumericError(ErrorKind::domain, "Li_0 requires |z| < 1");
  if (n == 1 && z == cplx{1.0, 0.0}) throw NumericError(ErrorKind::pole, "Li_1 has a pole at z = 1");
}

PolylogSeries li_series(int n, cplx z, std::uint64_t max_terms) {
  const double az = std::abs(z);
  if (!(az < 1.0)) throw NumericError(ErrorKind::domain, "polylog series requires |z| < 1");
  PolylogSeries out;
  if (z == cplx{}) return out;

  CompensatedSum sum;
  cplx power = 1.0;
  for (std::uint64_t k = 1; k <= max_terms; ++k) {
    power *= z;
    const double kn = std::pow(static_cast<double>(k), n);
    sum.add(power / kn);
    // |z|^(k+1)/(k+1)^n / (1 - |z|) bounds the rest.
    const double next = std::abs(power) * az / std::pow(k + 1.0, n);
    const double tail = next / (1.0 - az);
    if (tail <= 0.5 * kEps * std::abs(sum.value()) || next == 0.0) {
      out.value = sum.value();
      out.tail_bound = tail;
      out.terms = k;
      return out;
    }
  }
  throw NumericError(ErrorKind::no_convergence, "polylog series exceeded its term budget");
}

QuadratureResult li_integral(int n, cplx z, const QuadratureSpec& spec) {
  PolylogQuery{n, z}.validate();
  if (n < 1) throw NumericError(ErrorKind::argument, "integral representation requires n >= 1");
  const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
  const double prefactor = sign / factorial(n - 1);
  const cplx one_minus_z = 1.0 - z;
  // t = w^2: dt = 2w dw, log t = 2 log w, 1 - z t = (1 - z) + z (1 - w)(1 + w).
  auto integrand = [=](double w) -> cplx {
    const double log_t = 2.0 * std::log(w);
    const cplx denom = one_minus_z + z * ((1.0 - w) * (1.0 + w));
    return 2.0 * w * z * std::pow(log_t, n - 1) / denom;
  };
  QuadratureResult r = integrate(integrand, 0.0, 1.0, spec);
  r.value *= prefactor;
  r.abs_error *= std::abs(prefactor);
  return r;
}

cplx li(int n, cplx z) {
  PolylogQuery{n, z}.validate();
  if (z == cplx{}) return {};
  switch (n) {
    case 0: return z / (1.0 - z);
    case 1: return -log1p(-z);
    default: break;
  }
  if (std::abs(z) <= kPolylogSeriesRadius) return li_series(n, z).value;
  return li_integral(n, z).value;
}

cplx li_factorized(int n, cplx z, int m) {
  if (m < 1 || m > 12) throw NumericError(ErrorKind::argument, "li_factorized supports 1 <= m <= 12");
  if (!(std::pow(std::abs(z), m) <= 1.0 + kRimSlack))
    throw NumericError(ErrorKind::domain, "li_factorized requires |z|^m <= 1");
  CompensatedSum sum;
  for (int k = 1; k <= m; ++k) {
    const cplx root = root_of_unity(k, m);
    sum.add(li(n, root * z));
  }
  return std::pow(static_cast<double>(m), n - 1) * sum.value();
}

}  // namespace ibs
