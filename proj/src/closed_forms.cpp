#include "ibs/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ibs/complex_math.hpp"
#include "ibs/error.hpp"
#include "ibs/summation.hpp"

namespace ibs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kSqrt3 = std::sqrt(3.0);

// The closed forms share two transcendental pieces, written in psi = 1/phi:
//   arctan[sqrt3/(2phi - 1)]      = arctan[sqrt3 psi / (2 - psi)]
//   log[(phi^3 + 1)/(phi + 1)^3]  = log1p[-3 psi / (1 + psi)^2]
// For |psi| <= 1 neither argument reaches a principal branch cut.
struct Pieces {
  cplx psi;
  cplx arctan;
  cplx log;
};

Pieces pieces(const CardanoRoot& root) {
  const cplx psi = root.inv_phi;
  const cplx one_psi = 1.0 + psi;
  return {psi, std::atan(kSqrt3 * psi / (2.0 - psi)), log1p(-3.0 * psi / (one_psi * one_psi))};
}

CardanoRoot checked_root(cplx x) {
  CardanoRoot root = phi(x);
  const double residual = root.radical_residual();
  if (!(residual <= radical_tolerance(x))) {
    throw NumericError(ErrorKind::branch_failure,
                       "cube-root branch inconsistent with its radical identity (residual " +
                           std::to_string(residual) + ")");
  }
  return root;
}

void require_disk(cplx x, bool strict, const char* what) {
  const double ax = std::abs(x);
  const bool ok = strict ? ax < kRadius : ax <= kRadius * (1.0 + 1e-14);
  if (!ok) {
    throw NumericError(ErrorKind::domain, std::string(what) + " requires |x| " + (strict ? "<" : "<=") +
                                              " 27/4, got |x| = " + std::to_string(ax));
  }
}

Evaluation finish(cplx value, double magnitude) {
  Evaluation e;
  e.value = value;
  e.abs_error_est = 32.0 * kEps * magnitude;
  e.method = Method::closed_form;
  e.work = 1;
  e.check_finite();
  return e;
}

}  // namespace

double radical_tolerance(cplx x) { return 1e-9 * (1.0 + std::abs(x)); }

double CardanoRoot::radical_residual() const {
  const cplx s = std::sqrt(81.0 - 12.0 * x);
  return std::abs(2.0 * x * phi * phi * phi + 2.0 * x - 27.0 - 3.0 * s);
}

CardanoRoot phi(cplx x) {
  if (x == cplx{}) throw NumericError(ErrorKind::domain, "phi(x) diverges at x = 0");
  CardanoRoot root;
  root.x = x;
  if (is_real(x) && x.real() <= kRadius) {
    const double xr = x.real();
    const double s = std::sqrt(81.0 - 12.0 * xr);
    // 27 - 2x + 3s = (9 + s)^2 / 6, free of cancellation.
    const double cube = (9.0 + s) * (9.0 + s) / (12.0 * xr);
    const double p = std::cbrt(cube);
    root.phi = p;
    root.inv_phi = 1.0 / p;
    root.branch = CubeRootBranch::real_cube_root;
    return root;
  }
  const cplx s = std::sqrt(81.0 - 12.0 * x);
  const cplx cube = (9.0 + s) * (9.0 + s) / (12.0 * x);
  root.phi = cbrt_principal(cube);
  root.inv_phi = 1.0 / root.phi;
  root.branch = CubeRootBranch::principal_complex;
  return root;
}

Evaluation s21(cplx x) {
  if (x == cplx{}) return finish({}, 0.0);
  require_disk(x, false, "S(2,1;x) closed form");
  const Pieces p = pieces(checked_root(x));
  const cplx a2 = 6.0 * p.arctan * p.arctan;
  const cplx l2 = 0.5 * p.log * p.log;
  return finish(a2 - l2, std::abs(a2) + std::abs(l2));
}

Evaluation s11(cplx x) {
  if (x == cplx{}) return finish({}, 0.0);
  require_disk(x, true, "S(1,1;x) closed form");
  const Pieces p = pieces(checked_root(x));
  const cplx psi = p.psi;
  const cplx psi3 = psi * psi * psi;
  const cplx t_arctan = 18.0 * psi / (psi * psi - psi + 1.0) * p.arctan;
  const cplx t_log = 3.0 * kSqrt3 * psi * (psi - 1.0) / (1.0 + psi3) * p.log;
  const cplx root = std::sqrt(27.0 - 4.0 * x);
  return finish((t_arctan - t_log) / root, (std::abs(t_arctan) + std::abs(t_log)) / std::abs(root));
}

Evaluation s01(cplx x) {
  if (x == cplx{}) return finish({}, 0.0);
  require_disk(x, true, "S(0,1;x) closed form");
  const Pieces p = pieces(checked_root(x));
  const cplx psi = p.psi;
  const cplx psi2 = psi * psi;
  const cplx psi3 = psi2 * psi;
  const cplx d = 27.0 - 4.0 * x;
  const cplx d32 = d * std::sqrt(d);
  const cplx quad = psi2 - psi + 1.0;
  const cplx one_psi3 = 1.0 + psi3;

  const cplx c_arctan =
      36.0 * psi * x / (d32 * quad) - 18.0 * kSqrt3 * psi * (psi2 - 1.0) / (quad * quad * d);
  const cplx c_log = 9.0 * psi * (psi2 * psi2 - 2.0 * psi3 - 2.0 * psi + 1.0) / (one_psi3 * one_psi3 * d) -
                     6.0 * kSqrt3 * psi * (psi - 1.0) * x / (d32 * one_psi3);
  const cplx rational = 108.0 * psi3 / (d * one_psi3 * one_psi3);

  const cplx t1 = c_arctan * p.arctan;
  const cplx t2 = c_log * p.log;
  return finish(t1 + t2 + rational, std::abs(t1) + std::abs(t2) + std::abs(rational));
}

PfqResult pfq_detailed(std::span<const Rational> numerator, std::span<const Rational> denominator, cplx z,
                       double tol) {
  const std::size_t p = numerator.size();
  const std::size_t q = denominator.size();
  for (const Rational& b : denominator) {
    if (b.den == 0) throw NumericError(ErrorKind::argument, "pFq parameter with zero denominator");
    const double v = b.value();
    if (v <= 0.0 && v == std::floor(v))
      throw NumericError(ErrorKind::argument, "pFq denominator parameter is a non-positive integer");
  }
  bool terminating = false;
  for (const Rational& a : numerator) {
    if (a.den == 0) throw NumericError(ErrorKind::argument, "pFq parameter with zero denominator");
    const double v = a.value();
    if (v <= 0.0 && v == std::floor(v)) terminating = true;
  }
  if (!terminating) {
    if (p > q + 1) throw NumericError(ErrorKind::argument, "pFq with p > q + 1 diverges");
    if (p == q + 1 && !(std::abs(z) < 1.0))
      throw NumericError(ErrorKind::domain, "pFq with p = q + 1 requires |z| < 1");
  }

  constexpr std::uint64_t kMaxTerms = 100'000;
  PfqResult out;
  CompensatedSum sum;
  cplx term = 1.0;
  sum.add(term);
  int small_run = 0;
  for (std::uint64_t k = 0; k < kMaxTerms; ++k) {
    const double kd = static_cast<double>(k);
    double ratio = 1.0 / (kd + 1.0);
    for (const Rational& a : numerator) ratio *= a.value() + kd;
    for (const Rational& b : denominator) ratio /= b.value() + kd;
    term *= ratio * z;
    sum.add(term);
    const double at = std::abs(term);
    const double as = std::abs(sum.value());
    const double r = std::abs(ratio * z);
    const double tail = r < 1.0 ? at * r / (1.0 - r) : at;
    const bool small = at == 0.0 || (at <= tol * as && tail <= 4.0 * tol * as);
    small_run = small ? small_run + 1 : 0;
    if (small_run >= 2) {
      out.value = sum.value();
      out.tail_bound = tail;
      out.terms = k + 2;
      return out;
    }
  }
  throw NumericError(ErrorKind::no_convergence, "pFq series did not converge within 10^5 terms");
}

cplx pfq(std::span<const Rational> numerator, std::span<const Rational> denominator, cplx z, double tol) {
  return pfq_detailed(numerator, denominator, z, tol).value;
}

Evaluation s_hypergeometric(int n, cplx x) {
  Evaluation e;
  e.method = Method::pfq;
  if (x == cplx{}) return e;
  if (n < 0 || n > 2)
    throw NumericError(ErrorKind::not_applicable, "hypergeometric route covers n in {0, 1, 2}");
  require_disk(x, true, "hypergeometric route");
  std::vector<Rational> a;
  std::vector<Rational> b{{4, 3}, {5, 3}};
  switch (n) {
    case 2:
      a = {{1}, {1}, {1}, {3, 2}};
      b.push_back({2});
      break;
    case 1: a = {{1}, {1}, {3, 2}}; break;
    default: a = {{1}, {3, 2}, {2}}; break;
  }
  const PfqResult r = pfq_detailed(a, b, 4.0 * x / 27.0);
  const cplx scale = x / 3.0;
  e.value = scale * r.value;
  e.abs_error_est = std::abs(scale) * (r.tail_bound + 4.0 * kEps * std::abs(r.value) * std::sqrt(r.terms));
  e.work = r.terms;
  e.check_finite();
  return e;
}

}  // namespace ibs
