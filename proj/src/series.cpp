#include "ibs/series.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "ibs/error.hpp"
#include "ibs/summation.hpp"

namespace ibs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// prod_{j=1..m}(mk+j) prod_{j=1..2m}(2mk+j) / prod_{j=1..3m}(3mk+j), the ratio
// C(3mk,mk) / C(3m(k+1), m(k+1)). Factors are interleaved to keep the running
// product near one.
double binomial_ratio(int k, int m) {
  const double mk = static_cast<double>(m) * k;
  double r = 1.0;
  for (int j = 1; j <= m; ++j) {
    r *= (mk + j) / (3.0 * mk + j);
    r *= (2.0 * mk + 2 * j - 1) / (3.0 * mk + m + 2 * j - 1);
    r *= (2.0 * mk + 2 * j) / (3.0 * mk + m + 2 * j);
  }
  return r;
}

double weight_ratio(int k, int n) {
  return std::pow(static_cast<double>(k) / (k + 1.0), n);
}

#if defined(__GLIBC__)
double log_gamma(double v) {
  int sign = 0;
  return ::lgamma_r(v, &sign);
}
#else
double log_gamma(double v) { return std::lgamma(v); }
#endif

}  // namespace

cplx term_ratio(int k, int n, cplx x) { return stride_term_ratio(k, n, 1, x); }

cplx stride_term_ratio(int k, int n, int m, cplx x) {
  return x * (weight_ratio(k, n) * binomial_ratio(k, m));
}

cplx first_term(int m, cplx x) {
  // 1 / C(3m, m) = m! (2m)! / (3m)! = prod_{j=1..m} j / (2m + j)
  double inv = 1.0;
  for (int j = 1; j <= m; ++j) inv *= static_cast<double>(j) / (2.0 * m + j);
  return x * inv;
}

double asymptotic_ratio(int m, cplx x) { return std::abs(x) * std::pow(4.0 / 27.0, m); }

std::uint64_t default_max_terms() {
  if (const char* env = std::getenv("SERIES_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

std::vector<cplx> series_terms(const SeriesParams& params, int count) {
  params.validate();
  std::vector<cplx> terms;
  if (count <= 0) return terms;
  terms.reserve(static_cast<std::size_t>(count));
  cplx t = first_term(params.m, params.x);
  terms.push_back(t);
  for (int k = 1; k < count; ++k) {
    t *= stride_term_ratio(k, params.n, params.m, params.x);
    terms.push_back(t);
  }
  return terms;
}

Evaluation sum_direct(const SeriesParams& params, const DirectSumOptions& opts) {
  params.validate();
  Evaluation out;
  out.method = Method::direct_sum;
  if (params.x == cplx{}) return out;

  const Domain dom = params.domain();
  if (dom == Domain::outside) {
    throw NumericError(ErrorKind::domain,
                       "direct sum requires |x| < (27/4)^m = " + std::to_string(params.radius()) +
                           " (or |x| = (27/4)^m with n >= 2); got |x| = " +
                           std::to_string(std::abs(params.x)));
  }

  const int n = params.n;
  const int m = params.m;
  const double ax = std::abs(params.x);
  const double rho = asymptotic_ratio(m, params.x);
  // Rounding budget per recurrence step, first order in eps.
  const double step_rel_err = 0.5 * kEps * (6.0 * m + n + 4.0);

  CompensatedSum sum;
  cplx t = first_term(m, params.x);
  sum.add(t);
  double round_err = 0.0;
  int small_run = 0;
  std::uint64_t k = 1;
  double tail = 0.0;
  const bool on_boundary = dom == Domain::boundary;

  for (;; ++k) {
    if (k >= opts.max_terms) {
      throw NumericError(ErrorKind::no_convergence,
                         "direct sum did not converge within " + std::to_string(opts.max_terms) +
                             " terms" + (dom == Domain::boundary ? " (boundary point)" : ""));
    }
    const int ki = static_cast<int>(k);
    t *= stride_term_ratio(ki, n, m, params.x);
    sum.add(t);
    const double at = std::abs(t);
    round_err += at * static_cast<double>(k) * step_rel_err;

    const double as = std::abs(sum.value());
    // The binomial part of the ratio decreases in k and the weight part is at
    // most one, so |x| * binomial_ratio bounds every later ratio.
    const double q = std::max(ax * binomial_ratio(ki + 1, m), rho);
    if (on_boundary) {
      // Terms decay like k^(1/2-n); the tail is about |t_k| k / (n - 3/2).
      tail = at * static_cast<double>(k + 1) / (n - 1.5);
    } else {
      tail = q < 1.0 ? at * q / (1.0 - q) : at;
    }
    const bool small = at == 0.0 || (at <= opts.rel_tol * as && tail <= opts.rel_tol * as);
    small_run = small ? small_run + 1 : 0;
    if (small_run >= 2) break;
  }

  out.value = sum.value();
  out.abs_error_est = tail + round_err + 2.0 * kEps * std::abs(out.value);
  out.work = k + 1;
  out.check_finite();
  return out;
}

boost::multiprecision::cpp_int binomial_exact(int a, int b) {
  if (b < 0 || a < 0 || b > a)
    throw NumericError(ErrorKind::argument, "binomial_exact requires 0 <= b <= a, got (" +
                                                std::to_string(a) + ", " + std::to_string(b) + ")");
  if (a > 400) throw NumericError(ErrorKind::argument, "binomial_exact supports a <= 400");
  b = std::min(b, a - b);
  boost::multiprecision::cpp_int c = 1;
  for (int i = 1; i <= b; ++i) {
    c *= a - b + i;
    c /= i;
  }
  return c;
}

double beta_term_identity(int k) {
  const double kd = k;
  return kd * std::exp(log_gamma(kd) + log_gamma(2.0 * kd + 1.0) - log_gamma(3.0 * kd + 1.0));
}

}  // namespace ibs
