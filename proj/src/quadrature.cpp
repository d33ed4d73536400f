#include "ibs/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "ibs/error.hpp"
#include "ibs/summation.hpp"

namespace ibs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [0,1); odd indices are the Gauss 7-point nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  cplx value{};
  double error = 0.0;
};

cplx checked_eval(const Integrand& f, double t) {
  const cplx v = f(t);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericError(ErrorKind::non_finite, "integrand is not finite at t = " + std::to_string(t));
  return v;
}

// One Gauss-Kronrod 7/15 application with the usual error heuristic
// (scaled |K15 - G7| with a rounding floor).
Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const cplx fc = checked_eval(f, center);
  cplx resg = fc * kWg[3];
  cplx resk = fc * kWgk[7];
  double resabs = std::abs(fc) * kWgk[7];
  std::array<cplx, 7> fv1{}, fv2{};

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = checked_eval(f, center - dx);
    const cplx f2 = checked_eval(f, center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }

  const cplx reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  Panel p{a, b, resk * half, 0.0};
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  p.error = err;
  return p;
}

struct WorseFirst {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;  // deterministic tie-break
  }
};

QuadratureResult reduce(std::vector<Panel>& panels, std::uint64_t evaluations) {
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  CompensatedSum value;
  double err = 0.0;
  for (const auto& p : panels) {
    value.add(p.value);
    err += p.error;
  }
  return {value.value(), err, evaluations, static_cast<int>(panels.size())};
}

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.a + p.b);
  const double scale = std::max(std::abs(p.a), std::abs(p.b));
  return mid > p.a && mid < p.b && (p.b - p.a) > 64.0 * kEps * scale;
}

void require_tolerance(const QuadratureResult& r, const QuadratureSpec& spec, const char* what) {
  const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value));
  if (!(r.abs_error <= target)) {
    throw NumericError(ErrorKind::tolerance_not_met,
                       std::string(what) + ": error estimate " + std::to_string(r.abs_error) +
                           " exceeds target " + std::to_string(target) + " after " +
                           std::to_string(r.intervals) + " intervals");
  }
}

template <typename Run>
QuadratureResult oriented(double a, double b, Run&& run) {
  if (a == b) return {};
  if (a < b) return run(a, b);
  QuadratureResult r = run(b, a);
  r.value = -r.value;
  return r;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw NumericError(ErrorKind::argument, "quadrature tolerances must be positive");
  if (max_subdivisions < 1 || max_subdivisions > 10'000)
    throw NumericError(ErrorKind::argument, "max_subdivisions must lie in [1, 10000]");
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (spec.rule == QuadratureRule::nested_embedded) return integrate_adaptive(f, a, b, spec);
  QuadratureResult r = integrate_composite(f, a, b, spec.max_subdivisions);
  require_tolerance(r, spec, "fixed composite quadrature");
  return r;
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  return oriented(a, b, [&](double lo, double hi) {
    std::priority_queue<Panel, std::vector<Panel>, WorseFirst> heap;
    std::vector<Panel> settled;
    Panel first = gk15(f, lo, hi);
    std::uint64_t evals = 15;
    cplx total = first.value;
    double total_err = first.error;
    heap.push(first);
    int intervals = 1;

    while (!heap.empty()) {
      const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
      if (total_err <= target) break;
      if (intervals >= spec.max_subdivisions) break;
      Panel worst = heap.top();
      heap.pop();
      if (!splittable(worst)) {
        settled.push_back(worst);
        continue;
      }
      const double mid = 0.5 * (worst.a + worst.b);
      const Panel left = gk15(f, worst.a, mid);
      const Panel right = gk15(f, mid, worst.b);
      evals += 30;
      ++intervals;
      total += left.value + right.value - worst.value;
      total_err += left.error + right.error - worst.error;
      heap.push(left);
      heap.push(right);
    }

    while (!heap.empty()) {
      settled.push_back(heap.top());
      heap.pop();
    }
    QuadratureResult r = reduce(settled, evals);
    require_tolerance(r, spec, "adaptive quadrature");
    return r;
  });
}

QuadratureResult integrate_composite(const Integrand& f, double a, double b, int panels) {
  if (panels < 1) throw NumericError(ErrorKind::argument, "panel count must be positive");
  return oriented(a, b, [&](double lo, double hi) {
    std::vector<Panel> results(static_cast<std::size_t>(panels));
    const double width = (hi - lo) / panels;
    // Exceptions cannot cross the parallel region; keep the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < panels; ++i) {
      try {
        const double pa = lo + width * i;
        const double pb = i + 1 == panels ? hi : lo + width * (i + 1);
        results[static_cast<std::size_t>(i)] = gk15(f, pa, pb);
      } catch (...) {
#pragma omp critical(ibs_quadrature_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return reduce(results, 15ull * static_cast<std::uint64_t>(panels));
  });
}

QuadratureResult integrate_composite_serial(const Integrand& f, double a, double b, int panels) {
  if (panels < 1) throw NumericError(ErrorKind::argument, "panel count must be positive");
  return oriented(a, b, [&](double lo, double hi) {
    std::vector<Panel> results(static_cast<std::size_t>(panels));
    const double width = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i) {
      const double pa = lo + width * i;
      const double pb = i + 1 == panels ? hi : lo + width * (i + 1);
      results[static_cast<std::size_t>(i)] = gk15(f, pa, pb);
    }
    return reduce(results, 15ull * static_cast<std::uint64_t>(panels));
  });
}

}  // namespace ibs
