#include "ibs/parallel.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ibs {

PointResult evaluate_point(const SeriesParams& params, const Route& route, const EvalOptions& opts) {
  PointResult r;
  try {
    r.eval = evaluate(params, route, opts);
    r.ok = true;
  } catch (const NumericError& e) {
    r.error = e.kind();
    r.message = e.what();
  } catch (const std::exception& e) {
    r.error = ErrorKind::argument;
    r.message = e.what();
  }
  return r;
}

std::vector<PointResult> evaluate_grid(std::span<const SeriesParams> points, const Route& route,
                                       const EvalOptions& opts) {
  std::vector<PointResult> out(points.size());
  const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_point(points[static_cast<std::size_t>(i)], route, opts);
  }
  return out;
}

std::vector<PointResult> evaluate_grid_serial(std::span<const SeriesParams> points, const Route& route,
                                              const EvalOptions& opts) {
  std::vector<PointResult> out;
  out.reserve(points.size());
  for (const SeriesParams& p : points) out.push_back(evaluate_point(p, route, opts));
  return out;
}

int set_thread_count(int threads) {
#if defined(_OPENMP)
  const int previous = omp_get_max_threads();
  if (threads > 0) omp_set_num_threads(threads);
  return previous;
#else
  (void)threads;
  return 1;
#endif
}

}  // namespace ibs
