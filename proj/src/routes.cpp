#include "ibs/routes.hpp"

#include <string>

#include "ibs/closed_forms.hpp"
#include "ibs/complex_math.hpp"
#include "ibs/error.hpp"
#include "ibs/folding.hpp"
#include "ibs/integral_reps.hpp"

namespace ibs {

namespace {

void require_stride_one(const SeriesParams& p, Method method) {
  if (p.m != 1) {
    throw NumericError(ErrorKind::not_applicable,
                       std::string(to_string(method)) + " evaluates m = 1 only; use folding for m > 1");
  }
}

void require_in_domain(const SeriesParams& p) {
  if (p.domain() == Domain::outside) {
    throw NumericError(ErrorKind::domain, "|x| = " + std::to_string(std::abs(p.x)) + " is outside the domain: need |x| < (27/4)^" +
                                              std::to_string(p.m) + " = " + std::to_string(p.radius()) +
                                              (p.n >= 2 ? " (equality allowed)" : " (equality excluded for n <= 1)"));
  }
}

}  // namespace

Method default_inner(int n) { return n <= 2 ? Method::closed_form : Method::quad_eq22; }

Route resolve_auto(const SeriesParams& params) {
  if (params.n <= 2) {
    if (params.m == 1) return {Method::closed_form, std::nullopt};
    return {Method::folding, Method::closed_form};
  }
  if (params.m == 1) return {Method::quad_eq22, std::nullopt};
  return {Method::folding, Method::quad_eq22};
}

std::string route_label(const Route& route) {
  if (!route.method) return "auto";
  std::string label(to_string(*route.method));
  if (*route.method == Method::folding && route.inner) label += "(" + std::string(to_string(*route.inner)) + ")";
  return label;
}

Evaluation evaluate(const SeriesParams& params, const Route& route, const EvalOptions& opts) {
  params.validate();
  const Route r = route.method ? route : resolve_auto(params);
  require_in_domain(params);
  const Method method = *r.method;

  switch (method) {
    case Method::direct_sum: return sum_direct(params, opts.direct);
    case Method::closed_form:
      require_stride_one(params, method);
      switch (params.n) {
        case 2: return s21(params.x);
        case 1: return s11(params.x);
        case 0: return s01(params.x);
        default: throw NumericError(ErrorKind::not_applicable, "closed forms exist only for n <= 2");
      }
    case Method::quad_eq22:
      require_stride_one(params, method);
      return quad_polylog_integral(params.n, params.x, opts.quadrature);
    case Method::quad_eq21:
      require_stride_one(params, method);
      if (!is_real(params.x)) throw NumericError(ErrorKind::not_applicable, "quad-eq21 requires real x");
      return quad_two_term_integral(params.n, params.x.real(), opts.quadrature);
    case Method::folding: {
      const Method inner = r.inner.value_or(default_inner(params.n));
      return fold(params.n, params.m, params.x, inner, opts.quadrature);
    }
    case Method::pfq:
      require_stride_one(params, method);
      return s_hypergeometric(params.n, params.x);
  }
  throw NumericError(ErrorKind::argument, "unknown route");
}

std::vector<Route> applicable_routes(const SeriesParams& params) {
  std::vector<Route> routes;
  const bool boundary = params.domain() == Domain::boundary;
  const bool real = is_real(params.x);
  const int n = params.n;
  if (!boundary) routes.push_back({Method::direct_sum, std::nullopt});
  if (params.m == 1) {
    if (n <= 2) routes.push_back({Method::closed_form, std::nullopt});
    if (n >= 1) routes.push_back({Method::quad_eq22, std::nullopt});
    if (n >= 2 && real) routes.push_back({Method::quad_eq21, std::nullopt});
    if (n <= 2 && !boundary) routes.push_back({Method::pfq, std::nullopt});
  } else {
    if (n <= 2) routes.push_back({Method::folding, Method::closed_form});
    if (n >= 1) routes.push_back({Method::folding, Method::quad_eq22});
    if (!boundary) routes.push_back({Method::folding, Method::direct_sum});
  }
  return routes;
}

}  // namespace ibs
