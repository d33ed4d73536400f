#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ibs/types.hpp"

namespace ibs {

/// t_{k+1} / t_k for the stride-1 series S(n,1;x).
cplx term_ratio(int k, int n, cplx x);

/// t_{k+1} / t_k for stride m:
/// x (k/(k+1))^n prod_{j=1..m}(mk+j) prod_{j=1..2m}(2mk+j) / prod_{j=1..3m}(3mk+j).
cplx stride_term_ratio(int k, int n, int m, cplx x);

/// First term x / (1 * C(3m, m)).
cplx first_term(int m, cplx x);

/// Limit of |t_{k+1}/t_k| as k -> infinity: |x| (4/27)^m.
double asymptotic_ratio(int m, cplx x);

struct DirectSumOptions {
  double rel_tol = 1e-15;
  std::uint64_t max_terms = 1'000'000;
};

/// Reads SERIES_MAX_TERMS (default 10^6).
std::uint64_t default_max_terms();

/// Compensated summation of the series, terms built by the ratio recurrence.
/// Stops once two consecutive terms are negligible relative to the partial sum
/// (tail bound included when the ratio is below one).
Evaluation sum_direct(const SeriesParams& params, const DirectSumOptions& opts = {});

/// The first `count` terms t_1..t_count as produced by the ratio recurrence.
std::vector<cplx> series_terms(const SeriesParams& params, int count);

/// Exact C(a, b) for b <= a <= 400.
boost::multiprecision::cpp_int binomial_exact(int a, int b);

/// k Gamma(k) Gamma(2k+1) / Gamma(3k+1) through log-gamma; equals 1/C(3k,k).
double beta_term_identity(int k);

}  // namespace ibs
