#pragma once

#include <optional>
#include <vector>

#include "ibs/quadrature.hpp"
#include "ibs/series.hpp"
#include "ibs/types.hpp"

namespace ibs {

/// An evaluation route. An empty method means "auto"; an empty inner route for
/// folding means closed-form when n <= 2 and quad-eq22 otherwise.
struct Route {
  std::optional<Method> method;
  std::optional<Method> inner;

  friend bool operator==(const Route&, const Route&) = default;
};

struct EvalOptions {
  QuadratureSpec quadrature{};
  DirectSumOptions direct{1e-15, default_max_terms()};
};

/// closed-form if n <= 2 and m = 1; folding(closed-form) if n <= 2;
/// quad-eq22 if m = 1 and n >= 3; folding(quad-eq22) otherwise.
Route resolve_auto(const SeriesParams& params);

/// Default inner route for folding.
Method default_inner(int n);

/// Evaluates S(n,m;x) by exactly the route requested; a route that cannot
/// handle the parameters throws not_applicable instead of substituting.
Evaluation evaluate(const SeriesParams& params, const Route& route, const EvalOptions& opts = {});

/// Every route that applies to params, in a fixed order: direct-sum,
/// closed-form, quad-eq22, quad-eq21, folding (one per usable inner route),
/// pfq. Boundary points skip direct-sum.
std::vector<Route> applicable_routes(const SeriesParams& params);

std::string route_label(const Route& route);

}  // namespace ibs
