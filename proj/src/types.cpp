#include "ibs/types.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "ibs/error.hpp"

namespace ibs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain-error";
    case ErrorKind::argument: return "argument-error";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::pole: return "pole-error";
    case ErrorKind::no_convergence: return "no-convergence";
    case ErrorKind::tolerance_not_met: return "tolerance-not-met";
    case ErrorKind::branch_failure: return "branch-failure";
    case ErrorKind::unbounded_limit: return "unbounded-limit";
    case ErrorKind::non_finite: return "non-finite";
  }
  return "unknown";
}

double SeriesParams::radius() const { return std::pow(kRadius, m); }

Domain SeriesParams::domain() const {
  const double r = radius();
  const double ax = std::abs(x);
  const double slack = 1e-14 * r;
  if (ax < r - slack) return Domain::interior;
  if (ax <= r + slack) return n >= 2 ? Domain::boundary : Domain::outside;
  return Domain::outside;
}

void SeriesParams::validate() const {
  if (n < 0) throw NumericError(ErrorKind::argument, "n must be non-negative, got " + std::to_string(n));
  if (m < 1) throw NumericError(ErrorKind::argument, "m must be at least 1, got " + std::to_string(m));
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw NumericError(ErrorKind::argument, "x must be finite");
}

namespace {
constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames{{
    {Method::direct_sum, "direct-sum"},
    {Method::closed_form, "closed-form"},
    {Method::quad_eq22, "quad-eq22"},
    {Method::quad_eq21, "quad-eq21"},
    {Method::folding, "folding"},
    {Method::pfq, "pfq"},
}};
}  // namespace

std::string_view to_string(Method method) noexcept {
  for (const auto& [m, name] : kMethodNames)
    if (m == method) return name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (const auto& [m, n] : kMethodNames)
    if (n == name) return m;
  return std::nullopt;
}

void Evaluation::check_finite() const {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw NumericError(ErrorKind::non_finite, "evaluation produced a non-finite value");
  if (!std::isfinite(abs_error_est) || abs_error_est < 0.0)
    throw NumericError(ErrorKind::non_finite, "evaluation produced an invalid error estimate");
}

}  // namespace ibs
