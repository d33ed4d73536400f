#include <doctest.h>

#include <cstdlib>
#include <limits>

#include "ibs/error.hpp"
#include "ibs/series.hpp"
#include "test_util.hpp"

using namespace ibs;
using testutil::close;

namespace {

double exact_inverse_binomial(int a, int b) {
  return 1.0 / binomial_exact(a, b).convert_to<double>();
}

}  // namespace

TEST_CASE("first term is x / C(3m, m)") {
  CHECK(first_term(1, 1.0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(first_term(2, 1.0).real() == doctest::Approx(1.0 / 15.0).epsilon(1e-16));
  CHECK(first_term(3, 2.0).real() == doctest::Approx(2.0 / 84.0).epsilon(1e-16));
}

TEST_CASE("term recurrence matches exact binomials up to k = 30") {
  for (int m : {1, 2, 3}) {
    for (int n : {0, 1, 2, 3}) {
      for (double x : {1.0, -2.5}) {
        const auto terms = series_terms({n, m, x}, 30);
        REQUIRE(terms.size() == 30);
        for (int k = 1; k <= 30; ++k) {
          const double expected =
              std::pow(x, k) / std::pow(static_cast<double>(k), n) * exact_inverse_binomial(3 * m * k, m * k);
          INFO("m=" << m << " n=" << n << " x=" << x << " k=" << k);
          CHECK(std::abs(terms[k - 1] - expected) <= 1e-13 * std::abs(expected));
        }
      }
    }
  }
}

TEST_CASE("beta-function form of 1/C(3k,k) up to k = 50") {
  for (int k = 1; k <= 50; ++k) {
    const double expected = exact_inverse_binomial(3 * k, k);
    INFO("k=" << k);
    CHECK(std::abs(beta_term_identity(k) - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("exact binomials") {
  CHECK(binomial_exact(6, 2) == 15);
  CHECK(binomial_exact(30, 10) == 30045015);
  CHECK(binomial_exact(400, 0) == 1);
  CHECK_THROWS_AS(binomial_exact(401, 3), NumericError);
  CHECK_THROWS_AS(binomial_exact(5, 6), NumericError);
}

TEST_CASE("stride-1 ratio agrees with the general stride ratio") {
  for (int k = 1; k < 40; ++k) {
    CHECK(close(stride_term_ratio(k, 2, 1, {1.5, -0.5}), term_ratio(k, 2, {1.5, -0.5}), 1e-15));
  }
}

TEST_CASE("term ratio modulus converges monotonically to its limit") {
  // |r_k| ~ limit (1 + (1/2 - n)/k): from above for n = 0, from below for n >= 1.
  for (int m : {1, 2, 3}) {
    for (int n : {0, 1, 2, 3}) {
      const cplx x{2.0, 1.0};
      const double limit = asymptotic_ratio(m, x);
      CHECK(limit == doctest::Approx(std::abs(x) * std::pow(4.0 / 27.0, m)));
      double prev_gap = std::numeric_limits<double>::infinity();
      for (int k = 1; k <= 300; ++k) {
        const double r = std::abs(stride_term_ratio(k, n, m, x));
        const double gap = std::abs(r - limit);
        INFO("m=" << m << " n=" << n << " k=" << k);
        CHECK(gap < prev_gap);
        CHECK((n == 0 ? r > limit : r < limit));
        prev_gap = gap;
      }
      CHECK(prev_gap < 0.02 * limit);
    }
  }
}

TEST_CASE("sum_direct reproduces the reference values") {
  for (const auto& r : ref::series) {
    const SeriesParams p = testutil::params_of(r);
    if (p.domain() != Domain::interior) continue;
    const Evaluation e = sum_direct(p);
    INFO("n=" << r.n << " m=" << r.m << " x=" << r.x_re << "+" << r.x_im << "i");
    CHECK(close(e.value, testutil::value_of(r), 1e-13));
    CHECK(e.method == Method::direct_sum);
    CHECK(e.work > 0);
  }
}

TEST_CASE("sum_direct error estimate covers the actual error") {
  int covered = 0;
  int total = 0;
  for (const auto& r : ref::series) {
    const SeriesParams p = testutil::params_of(r);
    if (p.domain() != Domain::interior) continue;
    const Evaluation e = sum_direct(p);
    ++total;
    // The reference itself is a rounded double; allow its half-ulp.
    const double ref_rounding = 0.5 * std::numeric_limits<double>::epsilon() * std::abs(testutil::value_of(r));
    if (std::abs(e.value - testutil::value_of(r)) <= e.abs_error_est + ref_rounding) ++covered;
  }
  CHECK(covered >= 0.95 * total);
}

TEST_CASE("x = 0 gives exactly zero") {
  for (int n : {0, 1, 2, 5}) {
    for (int m : {1, 2, 4}) {
      const Evaluation e = sum_direct({n, m, 0.0});
      CHECK(e.value == cplx{});
      CHECK(e.abs_error_est == 0.0);
    }
  }
}

TEST_CASE("domain handling") {
  CHECK_THROWS_AS(sum_direct({2, 1, 7.0}), NumericError);
  try {
    sum_direct({1, 1, 6.75});
    FAIL("expected a domain error");
  } catch (const NumericError& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  try {
    sum_direct({-1, 1, 1.0});
    FAIL("expected an argument error");
  } catch (const NumericError& e) {
    CHECK(e.kind() == ErrorKind::argument);
  }
  CHECK_THROWS_AS(sum_direct({2, 0, 1.0}), NumericError);
  // (27/4)^2 bounds the stride-2 series.
  CHECK_NOTHROW(sum_direct({2, 2, 45.0}));
  CHECK_THROWS_AS(sum_direct({2, 2, 46.0}), NumericError);
}

TEST_CASE("boundary sum meets its tolerance for larger n and stops at the term cap otherwise") {
  const auto& b5 = ref::boundary[3];
  REQUIRE(b5.n == 5);
  const Evaluation e = sum_direct({5, 1, kRadius});
  CHECK(std::abs(e.value.real() - b5.value) <= 1e-12);
  CHECK(std::abs(e.value.real() - b5.value) <= e.abs_error_est + 1e-15);
  const Evaluation e4 = sum_direct({4, 1, kRadius});
  CHECK(std::abs(e4.value.real() - ref::boundary[2].value) <= 1e-13);
  try {
    sum_direct({2, 1, kRadius}, {1e-15, 1000});
    FAIL("expected no_convergence");
  } catch (const NumericError& err) {
    CHECK(err.kind() == ErrorKind::no_convergence);
  }
}

TEST_CASE("SERIES_MAX_TERMS sets the default term cap") {
  ::unsetenv("SERIES_MAX_TERMS");
  CHECK(default_max_terms() == 1'000'000);
  ::setenv("SERIES_MAX_TERMS", "25", 1);
  CHECK(default_max_terms() == 25);
  ::unsetenv("SERIES_MAX_TERMS");
}
