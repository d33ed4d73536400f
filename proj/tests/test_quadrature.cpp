#include <doctest.h>

#include <atomic>
#include <cmath>
#include <limits>

#include "ibs/error.hpp"
#include "ibs/quadrature.hpp"

using namespace ibs;

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

}  // namespace

TEST_CASE("smooth integrands") {
  const auto r = integrate([](double t) { return cplx{t * t}; }, 0.0, 1.0);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-15);
  const auto e = integrate([](double t) { return std::exp(cplx{0.0, t}); }, 0.0, 3.0);
  const cplx expected = (std::exp(cplx{0.0, 3.0}) - 1.0) / cplx{0.0, 1.0};
  CHECK(std::abs(e.value - expected) < 1e-14);
}

TEST_CASE("reversed limits negate the integral") {
  auto f = [](double t) { return cplx{std::cos(t)}; };
  const auto fwd = integrate(f, 0.0, 2.0);
  const auto back = integrate(f, 2.0, 0.0);
  CHECK(fwd.value == -back.value);
  CHECK(integrate(f, 1.0, 1.0).value == cplx{});
}

TEST_CASE("integrable endpoint singularities") {
  const auto lg = integrate([](double t) { return cplx{std::log(t)}; }, 0.0, 1.0);
  CHECK(std::abs(lg.value + 1.0) < 1e-12);
  const auto rs = integrate([](double t) { return cplx{1.0 / std::sqrt(t)}; }, 0.0, 1.0, {1e-10, 1e-10, 2000});
  CHECK(std::abs(rs.value - 2.0) < 1e-9);
}

TEST_CASE("interior logarithmic singularity") {
  // int_0^1 log|t - 1/3| dt
  const double a = 1.0 / 3.0, b = 2.0 / 3.0;
  const double exact = a * std::log(a) - a + b * std::log(b) - b;
  const auto r = integrate([](double t) { return cplx{std::log(std::abs(t - 1.0 / 3.0))}; }, 0.0, 1.0);
  CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("error estimates bound the actual error") {
  struct Case {
    Integrand f;
    double a, b, exact;
  };
  const Case cases[] = {
      {[](double t) { return cplx{std::exp(t)}; }, 0.0, 1.0, std::exp(1.0) - 1.0},
      {[](double t) { return cplx{1.0 / (1.0 + t * t)}; }, 0.0, 1.0, std::atan(1.0)},
      {[](double t) { return cplx{std::sqrt(t)}; }, 0.0, 1.0, 2.0 / 3.0},
      {[](double t) { return cplx{std::log(t)}; }, 0.0, 1.0, -1.0},
      {[](double t) { return cplx{std::sin(10 * t)}; }, 0.0, 3.0, (1.0 - std::cos(30.0)) / 10.0},
      {[](double t) { return cplx{1.0 / (1e-3 + (t - 0.3) * (t - 0.3))}; }, 0.0, 1.0,
       (std::atan(0.7 / std::sqrt(1e-3)) + std::atan(0.3 / std::sqrt(1e-3))) / std::sqrt(1e-3)},
  };
  for (const auto& c : cases) {
    const auto r = integrate(c.f, c.a, c.b, {1e-12, 1e-12, 2000});
    CHECK(std::abs(r.value - c.exact) <= r.abs_error + 4 * std::numeric_limits<double>::epsilon() * std::abs(c.exact));
  }
}

TEST_CASE("unreachable tolerance is reported") {
  const QuadratureSpec spec{1e-14, 1e-14, 8};
  CHECK(kind_of([&] { integrate([](double t) { return cplx{1.0 / ((t - 0.41) * (t - 0.41))}; }, 0.0, 1.0, spec); }) ==
        ErrorKind::tolerance_not_met);
}

TEST_CASE("non-finite integrand values are reported") {
  CHECK(kind_of([] { integrate([](double) { return cplx{std::nan("")}; }, 0.0, 1.0); }) == ErrorKind::non_finite);
}

TEST_CASE("quadrature settings validation") {
  CHECK(kind_of([] { QuadratureSpec{0.0, 1e-10, 10}.validate(); }) == ErrorKind::argument);
  CHECK(kind_of([] { QuadratureSpec{1e-10, -1.0, 10}.validate(); }) == ErrorKind::argument);
  CHECK(kind_of([] { QuadratureSpec{1e-10, 1e-10, 10001}.validate(); }) == ErrorKind::argument);
  CHECK(kind_of([] { QuadratureSpec{1e-10, 1e-10, 0}.validate(); }) == ErrorKind::argument);
  CHECK_NOTHROW(QuadratureSpec{1e-10, 1e-10, 10000}.validate());
}

TEST_CASE("adaptive integration is deterministic") {
  auto f = [](double t) { return cplx{std::log(std::abs(t - 0.3)), std::sin(7 * t)}; };
  const auto a = integrate(f, 0.0, 1.0);
  const auto b = integrate(f, 0.0, 1.0);
  CHECK(a.value == b.value);
  CHECK(a.abs_error == b.abs_error);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("composite rule: OpenMP and serial results are bit-identical") {
  auto f = [](double t) { return cplx{std::exp(-t) * std::cos(5 * t), std::sqrt(t)}; };
  for (int panels : {1, 7, 64, 1000}) {
    const auto par = integrate_composite(f, 0.0, 2.0, panels);
    const auto ser = integrate_composite_serial(f, 0.0, 2.0, panels);
    CHECK(par.value == ser.value);
    CHECK(par.abs_error == ser.abs_error);
    CHECK(par.evaluations == ser.evaluations);
  }
  const auto fine = integrate_composite(f, 0.0, 2.0, 200);
  const auto adaptive = integrate(f, 0.0, 2.0, {1e-10, 1e-10, 2000});
  CHECK(std::abs(fine.value - adaptive.value) <= fine.abs_error + adaptive.abs_error);
}

TEST_CASE("fixed-composite rule selected through the settings") {
  QuadratureSpec spec{1e-10, 1e-10, 50, QuadratureRule::fixed_composite};
  const auto r = integrate([](double t) { return cplx{t * t * t}; }, 0.0, 2.0, spec);
  CHECK(std::abs(r.value - 4.0) < 1e-13);
  CHECK(r.intervals == 50);
}

TEST_CASE("composite rule propagates integrand exceptions") {
  std::atomic<int> calls{0};
  auto f = [&](double t) -> cplx {
    ++calls;
    if (t > 0.5) throw NumericError(ErrorKind::domain, "boom");
    return cplx{t};
  };
  CHECK_THROWS_AS(integrate_composite(f, 0.0, 1.0, 16), NumericError);
}
