#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ibs/error.hpp"
#include "ibs/integral_reps.hpp"
#include "ibs/series.hpp"
#include "test_util.hpp"

using namespace ibs;
using testutil::close;

namespace {

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const NumericError& e) {
    return e.kind();
  }
  FAIL("expected a NumericError");
  return ErrorKind::argument;
}

const ref::SeriesValue* find_ref(int n, int m, cplx x) {
  for (const auto& r : ref::series)
    if (r.n == n && r.m == m && testutil::x_of(r) == x) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("single-integral form agrees with direct summation") {
  for (int n = 1; n <= 5; ++n) {
    for (double x : {-0.25, 0.5, -1.0, 1.0, 3.0, 6.0, -6.0}) {
      const auto* r = find_ref(n, 1, x);
      REQUIRE(r != nullptr);
      INFO("n=" << n << " x=" << x);
      const Evaluation e = quad_polylog_integral(n, x);
      CHECK(std::abs(e.value - testutil::value_of(*r)) <= 1e-10);
      CHECK(e.method == Method::quad_eq22);
    }
  }
}

TEST_CASE("single-integral form against sum_direct at +-1/4, +-3") {
  for (int n = 1; n <= 5; ++n) {
    for (double x : {0.25, -0.25, 3.0, -3.0}) {
      const Evaluation q = quad_polylog_integral(n, x);
      const Evaluation d = sum_direct({n, 1, x});
      CHECK(std::abs(q.value - d.value) <= 1e-10);
    }
  }
}

TEST_CASE("single-integral form at complex x") {
  for (const auto& r : ref::series) {
    if (r.m != 1 || r.x_im == 0.0 || r.n < 1) continue;
    INFO("n=" << r.n << " x=" << testutil::x_of(r));
    CHECK(std::abs(quad_polylog_integral(r.n, testutil::x_of(r)).value - testutil::value_of(r)) <= 1e-10);
  }
}

TEST_CASE("boundary values through the integrable singularity at t = 1/3") {
  for (const auto& b : ref::boundary) {
    INFO("n=" << b.n);
    const Evaluation e = quad_polylog_integral(b.n, kRadius);
    CHECK(std::abs(e.value.real() - b.value) <= 1e-9);
    CHECK(e.value.imag() == 0.0);
  }
  const double exact = 2.0 * std::numbers::pi * std::numbers::pi / 3.0 - 2.0 * std::log(2.0) * std::log(2.0);
  CHECK(std::abs(quad_polylog_integral(2, kRadius).value.real() - exact) <= 1e-9);
  CHECK(kind_of([] { quad_polylog_integral(1, kRadius); }) == ErrorKind::domain);
  CHECK(kind_of([] { quad_polylog_integral(2, 6.8); }) == ErrorKind::domain);
  CHECK(kind_of([] { quad_polylog_integral(0, 1.0); }) == ErrorKind::not_applicable);
  CHECK(quad_polylog_integral(1, 0.0).value == cplx{});
}

TEST_CASE("integration limits of the two-term form") {
  const double pi = std::numbers::pi;
  const TwoTermLimits edge = two_term_limits(kRadius);
  CHECK(std::abs(edge.alpha + std::log(4.0)) < 1e-12);
  CHECK(std::abs(edge.phi - 1.0) < 1e-12);
  CHECK(std::abs(edge.beta + pi) < 1e-12);
  CHECK(std::abs(two_term_limits(kRadius, BetaConvention::flipped).beta - pi) < 1e-12);

  const TwoTermLimits half = two_term_limits(0.5);
  CHECK(std::abs(half.alpha - std::log(0.5)) < 1e-14);
  CHECK(std::abs(half.phi - (2.0 + std::sqrt(3.0))) < 1e-14);
  for (double x : {0.1, 1.0, 3.0, 6.0}) CHECK(two_term_limits(x).alpha < 0.0);

  CHECK(kind_of([] { two_term_limits(0.0); }) == ErrorKind::unbounded_limit);
  CHECK(kind_of([] { two_term_limits(7.0); }) == ErrorKind::domain);
}

TEST_CASE("two-term form agrees with direct summation") {
  for (int n : {2, 3, 4}) {
    for (double x : {0.5, 1.0, 3.0, 6.0, -1.0, -6.0}) {
      const auto* r = find_ref(n, 1, x);
      REQUIRE(r != nullptr);
      INFO("n=" << n << " x=" << x);
      const Evaluation e = quad_two_term_integral(n, x);
      CHECK(std::abs(e.value - testutil::value_of(*r)) <= 1e-8);
      CHECK(e.method == Method::quad_eq21);
    }
  }
}

TEST_CASE("two-term form agrees with the single-integral form, boundary included") {
  for (int n : {2, 3, 4}) {
    for (double x : {0.5, 1.0, 3.0, 6.0, kRadius}) {
      INFO("n=" << n << " x=" << x);
      CHECK(std::abs(quad_two_term_integral(n, x).value - quad_polylog_integral(n, x).value) <= 1e-8);
    }
  }
}

TEST_CASE("only the recorded beta convention survives an odd log power") {
  for (double x : {0.5, 1.0, 3.0}) {
    const auto* r = find_ref(3, 1, x);
    REQUIRE(r != nullptr);
    const TwoTermParts good = two_term_parts(3, x, {}, BetaConvention::standard);
    const TwoTermParts bad = two_term_parts(3, x, {}, BetaConvention::flipped);
    const cplx expected = testutil::value_of(*r);
    CHECK(std::abs(good.logarithmic + good.trigonometric - expected) < 1e-9);
    CHECK(std::abs(bad.logarithmic + bad.trigonometric - expected) > 1e-3);
  }
  // With n = 2 only beta^2 enters.
  const TwoTermParts a = two_term_parts(2, 1.0, {}, BetaConvention::standard);
  const TwoTermParts b = two_term_parts(2, 1.0, {}, BetaConvention::flipped);
  CHECK(std::abs(a.trigonometric - b.trigonometric) < 1e-12);
}

TEST_CASE("two-term parts at the boundary for n = 2") {
  const double pi = std::numbers::pi;
  const double l2 = std::log(2.0);
  const TwoTermParts p = two_term_parts(2, kRadius);
  CHECK(std::abs(p.logarithmic.real() + 2.0 * l2 * l2) < 1e-10);
  CHECK(std::abs(p.trigonometric.real() - 2.0 * pi * pi / 3.0) < 1e-10);
}

TEST_CASE("quadrature error estimates cover the actual error") {
  int covered = 0;
  int total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (double x : {-0.25, 0.25, -1.0, 1.0, -3.0, 3.0, 6.0, -6.0}) {
      const Evaluation q = quad_polylog_integral(n, x);
      const Evaluation d = sum_direct({n, 1, x});
      ++total;
      if (std::abs(q.value - d.value) <= q.abs_error_est + d.abs_error_est) ++covered;
    }
  }
  CHECK(covered >= 0.95 * total);
}

TEST_CASE("argument checks for the two-term form") {
  CHECK(kind_of([] { quad_two_term_integral(1, 1.0); }) == ErrorKind::not_applicable);
  CHECK(kind_of([] { quad_two_term_integral(2, 7.0); }) == ErrorKind::domain);
  // The limits are unbounded at x = 0, but the value is known.
  CHECK(quad_two_term_integral(2, 0.0).value == cplx{});
}
