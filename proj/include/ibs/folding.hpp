#pragma once

#include <vector>

#include "ibs/quadrature.hpp"
#include "ibs/types.hpp"

namespace ibs {

/// Imaginary part tolerated (and then dropped) in a folded result at real x:
/// 1e-9 (1 + |result|).
double fold_imag_tolerance(cplx value);

/// The m arguments w^j x^(1/m), j = 1..m, w = exp(2 pi i/m), x^(1/m) the
/// principal root. Real x yields exact real or imaginary arguments where the
/// angle allows.
std::vector<cplx> fold_arguments(int m, cplx x);

/// S(n,m;x) = m^(n-1) sum_j S(n,1; w^j x^(1/m)).
/// inner is closed_form (n <= 2), quad_eq22 or direct_sum. |x| <= (27/4)^m,
/// 1 <= m <= 6. For real x the imaginary residue is checked against
/// fold_imag_tolerance (branch_failure otherwise), recorded in
/// Evaluation::discarded_imag and dropped.
Evaluation fold(int n, int m, cplx x, Method inner, const QuadratureSpec& spec = {});

/// S(2,m;x) = m sum_k {6 arctan^2[sqrt3/(2phi_k - 1)] - (1/2) log^2[(1+phi_k^3)/(1+phi_k)^3]}
/// with phi_k = phi(w^k x^(1/m)). Same contract as fold.
Evaluation s2m_closed(int m, cplx x);

}  // namespace ibs
