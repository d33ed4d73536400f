#pragma once

#include <cmath>
#include <complex>

namespace ibs {

/// log(1 + w), principal branch, accurate for small |w|.
inline std::complex<double> log1p(std::complex<double> w) {
  const double a = w.real();
  const double b = w.imag();
  if (std::abs(a) + std::abs(b) > 0.5) return std::log(1.0 + w);
  // |1+w|^2 = 1 + (2a + a^2 + b^2)
  const double re = 0.5 * std::log1p(2.0 * a + a * a + b * b);
  return {re, std::atan2(b, 1.0 + a)};
}

/// Principal cube root.
inline std::complex<double> cbrt_principal(std::complex<double> z) {
  if (z == std::complex<double>{}) return {};
  if (z.imag() == 0.0 && z.real() > 0.0) return std::cbrt(z.real());
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

/// exp(i pi p / q), exact when the angle is a multiple of pi/2.
inline std::complex<double> unit_at(long p, long q) {
  const long period = 2 * q;
  p %= period;
  if (p < 0) p += period;
  if ((2 * p) % q == 0) {
    switch ((2 * p) / q) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 3.14159265358979323846 * static_cast<double>(p) / static_cast<double>(q));
}

/// k-th power of the primitive m-th root of unity, exp(2 pi i k/m).
inline std::complex<double> root_of_unity(long k, long m) { return unit_at(2 * k, m); }

inline bool is_real(std::complex<double> z) { return z.imag() == 0.0; }

}  // namespace ibs
