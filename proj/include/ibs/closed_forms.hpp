#pragma once

#include <cstdint>
#include <span>

#include "ibs/types.hpp"

namespace ibs {

enum class CubeRootBranch { real_cube_root, principal_complex };

/// phi(x) = [(27 - 2x + 3 sqrt(81 - 12x)) / (2x)]^(1/3).
struct CardanoRoot {
  cplx x{};
  cplx phi{};
  cplx inv_phi{};  // 1/phi, the small root; |inv_phi| <= 1 on the disk
  CubeRootBranch branch = CubeRootBranch::real_cube_root;

  /// |2x phi^3 + 2x - 27 - 3 sqrt(81 - 12x)| with phi^3 recomputed from phi.
  double radical_residual() const;
};

/// Real x <= 27/4 takes the sign-preserving real cube root; everything else
/// the principal complex cube root and principal square root.
/// Throws domain at x = 0.
CardanoRoot phi(cplx x);

/// Residual bound accepted by the closed forms: 1e-9 (1 + |x|).
double radical_tolerance(cplx x);

/// S(2,1;x) = 6 arctan^2[sqrt3/(2phi-1)] - (1/2) log^2[(phi^3+1)/(phi+1)^3],
/// |x| <= 27/4.
Evaluation s21(cplx x);

/// S(1,1;x) = x d/dx S(2,1;x), |x| < 27/4.
Evaluation s11(cplx x);

/// S(0,1;x) = x d/dx S(1,1;x), |x| < 27/4.
Evaluation s01(cplx x);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct PfqResult {
  cplx value{};
  double tail_bound = 0.0;
  std::uint64_t terms = 0;
};

/// Generalized hypergeometric series, standard convention
/// sum_{k>=0} prod (a_i)_k / prod (b_j)_k z^k / k!.
/// Requires p <= q + 1 and |z| < 1 when p = q + 1, unless some a_i is a
/// non-positive integer (terminating series). Fails after 10^5 terms.
PfqResult pfq_detailed(std::span<const Rational> numerator, std::span<const Rational> denominator, cplx z,
                       double tol = 1e-16);

cplx pfq(std::span<const Rational> numerator, std::span<const Rational> denominator, cplx z,
         double tol = 1e-16);

/// S(n,1;x) for n in {0,1,2} through (x/3) pFq(...; 4x/27).
Evaluation s_hypergeometric(int n, cplx x);

}  // namespace ibs
