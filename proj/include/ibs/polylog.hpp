#pragma once

#include <cstdint>

#include "ibs/quadrature.hpp"
#include "ibs/types.hpp"

namespace ibs {

/// Argument of Li_n on the closed unit disk.
struct PolylogQuery {
  int n = 2;
  cplx z{};

  /// Throws argument (n < 0), domain (|z| > 1 + 1e-12, or |z| >= 1 for n = 0)
  /// or pole (n = 1, z = 1).
  void validate() const;
};

/// Direct series below this modulus, integral representation above it.
inline constexpr double kPolylogSeriesRadius = 0.99;

struct PolylogSeries {
  cplx value{};
  double tail_bound = 0.0;  // bound on the omitted tail
  std::uint64_t terms = 0;
};

/// sum_{k>=1} z^k / k^n for |z| < 1, truncated once the geometric tail bound
/// drops below eps * |sum|.
PolylogSeries li_series(int n, cplx z, std::uint64_t max_terms = 2'000'000);

/// Li_n(z) = (-1)^(n-1)/(n-1)! int_0^1 z log^(n-1)(t) / (1 - z t) dt for n >= 1,
/// |z| <= 1, integrated in t = w^2.
QuadratureResult li_integral(int n, cplx z, const QuadratureSpec& spec = {1e-15, 1e-13, 2000});

/// Li_n(z) on the closed unit disk, principal branch.
/// Li_0 and Li_1 in closed form; n >= 2 by series for |z| <= 0.99 and by the
/// integral representation beyond.
cplx li(int n, cplx z);

/// m^(n-1) sum_{k=1..m} Li_n(w^k z), w = exp(2 pi i/m); equals Li_n(z^m).
/// Requires 1 <= m <= 12 and |z|^m <= 1.
cplx li_factorized(int n, cplx z, int m);

}  // namespace ibs
