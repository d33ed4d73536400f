#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ibs {

using cplx = std::complex<double>;

/// Radius of convergence of S(n,1;x).
inline constexpr double kRadius = 27.0 / 4.0;

enum class Domain { interior, boundary, outside };

/// The triple (n, m, x) of S(n,m;x) = sum_{k>=1} x^k / (k^n C(3mk, mk)).
struct SeriesParams {
  int n = 0;
  int m = 1;
  cplx x{};

  /// (27/4)^m.
  double radius() const;

  /// interior iff |x| < radius, boundary iff |x| == radius (within a few ulps),
  /// outside otherwise. Boundary points with n <= 1 are classified outside,
  /// since the series diverges there.
  Domain domain() const;

  friend bool operator==(const SeriesParams&, const SeriesParams&) = default;

  /// Throws NumericError(argument) when n < 0 or m < 1.
  void validate() const;
};

enum class Method { direct_sum, closed_form, quad_eq22, quad_eq21, folding, pfq };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// A computed value of the series with provenance.
struct Evaluation {
  cplx value{};
  double abs_error_est = 0.0;
  Method method = Method::direct_sum;
  std::uint64_t work = 0;  // terms summed or integrand evaluations
  /// Imaginary part dropped from a folded result at real x (zero otherwise).
  double discarded_imag = 0.0;

  /// Throws NumericError(argument) if value or error estimate is not finite.
  void check_finite() const;
};

}  // namespace ibs
