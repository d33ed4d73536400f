#pragma once

#include <span>
#include <string>
#include <vector>

#include "ibs/error.hpp"
#include "ibs/routes.hpp"

namespace ibs {

/// Outcome of one grid point; failures are data, not exceptions.
struct PointResult {
  bool ok = false;
  Evaluation eval{};
  ErrorKind error = ErrorKind::argument;
  std::string message;
};

PointResult evaluate_point(const SeriesParams& params, const Route& route, const EvalOptions& opts = {});

/// Evaluates every point with OpenMP, results stored in input order. Each
/// point is a pure computation, so the output is identical to
/// evaluate_grid_serial.
std::vector<PointResult> evaluate_grid(std::span<const SeriesParams> points, const Route& route,
                                       const EvalOptions& opts = {});

/// Serial reference for evaluate_grid.
std::vector<PointResult> evaluate_grid_serial(std::span<const SeriesParams> points, const Route& route,
                                              const EvalOptions& opts = {});

/// Sets the OpenMP thread count (no-op without OpenMP); returns the previous value.
int set_thread_count(int threads);

}  // namespace ibs
