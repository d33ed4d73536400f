#include "ibs/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ibs/closed_forms.hpp"
#include "ibs/error.hpp"
#include "ibs/identities.hpp"
#include "ibs/integral_reps.hpp"
#include "ibs/parallel.hpp"
#include "ibs/polylog.hpp"
#include "ibs/series.hpp"

namespace ibs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool uses_quadrature(const Route& r) {
  return r.method == Method::quad_eq22 || r.method == Method::quad_eq21 ||
         (r.method == Method::folding && r.inner == Method::quad_eq22);
}

double pair_tolerance(const Route& a, const Route& b, const ToleranceTiers& tiers) {
  if (a.method == Method::quad_eq21 || b.method == Method::quad_eq21) return tiers.two_stage;
  if (uses_quadrature(a) || uses_quadrature(b)) return tiers.quadrature;
  return tiers.direct;
}

std::string format_x(cplx x) {
  char buf[80];
  if (x.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.6g", x.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", x.real(), x.imag());
  }
  return buf;
}

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double number_from(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

Evaluation special_value_route(const IdentityRecord& rec) {
  if (rec.params.domain() == Domain::boundary) return quad_polylog_integral(rec.params.n, rec.params.x);
  return sum_direct(rec.params, {1e-15, default_max_terms()});
}

}  // namespace

ReportEntry ReportEntry::compare(std::string id, const SeriesParams& params, cplx lhs, cplx rhs, double tol,
                                 std::string detail, double wall_time_s) {
  ReportEntry e;
  e.id = std::move(id);
  e.params = params;
  e.lhs = lhs;
  e.rhs = rhs;
  e.abs_diff = std::abs(lhs - rhs);
  e.tol = tol;
  e.pass = e.abs_diff <= tol;
  e.detail = std::move(detail);
  e.wall_time_s = wall_time_s;
  return e;
}

ReportEntry ReportEntry::failure(std::string id, const SeriesParams& params, double tol, std::string detail,
                                 double wall_time_s) {
  ReportEntry e;
  e.id = std::move(id);
  e.params = params;
  e.abs_diff = std::numeric_limits<double>::infinity();
  e.tol = tol;
  e.pass = false;
  e.detail = std::move(detail);
  e.wall_time_s = wall_time_s;
  return e;
}

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.pass ? 1 : 0;
  return n;
}

std::size_t VerificationReport::failed() const { return entries.size() - passed(); }

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (ReportEntry e : other.entries) {
    e.id = prefix + "/" + e.id;
    entries.push_back(std::move(e));
  }
  wall_time_s += other.wall_time_s;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json times = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({
        {"id", e.id},
        {"params", {{"n", e.params.n}, {"m", e.params.m}, {"x_re", e.params.x.real()}, {"x_im", e.params.x.imag()}}},
        {"lhs", number(e.lhs.real())},
        {"lhs_im", number(e.lhs.imag())},
        {"rhs", number(e.rhs.real())},
        {"rhs_im", number(e.rhs.imag())},
        {"abs_diff", number(e.abs_diff)},
        {"tol", e.tol},
        {"pass", e.pass},
        {"detail", e.detail},
    });
    times.push_back(e.wall_time_s);
  }
  return {
      {"suite", report.suite},
      {"entries", std::move(entries)},
      {"summary", {{"pass", report.passed()}, {"fail", report.failed()}}},
      {"environment", {{"precision", report.precision}, {"epsilon", std::numeric_limits<double>::epsilon()}}},
      {"timing", {{"total_s", report.wall_time_s}, {"entries_s", std::move(times)}}},
  };
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.precision = j.at("environment").at("precision").get<std::string>();
  const auto& timing = j.at("timing");
  r.wall_time_s = timing.at("total_s").get<double>();
  const auto& times = timing.at("entries_s");
  const auto& entries = j.at("entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& je = entries[i];
    ReportEntry e;
    e.id = je.at("id").get<std::string>();
    const auto& p = je.at("params");
    e.params = {p.at("n").get<int>(), p.at("m").get<int>(), {p.at("x_re").get<double>(), p.at("x_im").get<double>()}};
    e.lhs = {number_from(je.at("lhs")), number_from(je.at("lhs_im"))};
    e.rhs = {number_from(je.at("rhs")), number_from(je.at("rhs_im"))};
    e.abs_diff = number_from(je.at("abs_diff"));
    e.tol = je.at("tol").get<double>();
    e.pass = je.at("pass").get<bool>();
    e.detail = je.at("detail").get<std::string>();
    e.wall_time_s = i < times.size() ? times[i].get<double>() : 0.0;
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-52s %3s %3s %-12s %24s %24s %10s %8s  %s\n", "id", "n", "m", "x", "lhs", "rhs",
                "|diff|", "tol", "result");
  out << "suite: " << report.suite << "\n" << line;
  for (const auto& e : report.entries) {
    std::snprintf(line, sizeof line, "%-52s %3d %3d %-12s %24.17g %24.17g %10.3g %8.1g  %s\n", e.id.c_str(),
                  e.params.n, e.params.m, format_x(e.params.x).c_str(), e.lhs.real(), e.rhs.real(), e.abs_diff, e.tol,
                  e.pass ? "PASS" : "FAIL");
    out << line;
    if (!e.pass && !e.detail.empty()) out << "    " << e.detail << "\n";
  }
  out << "summary: " << report.passed() << " pass, " << report.failed() << " fail";
  std::snprintf(line, sizeof line, " (wall time %.2f s)\n", report.wall_time_s);
  out << line;
  return out.str();
}

VerificationReport run_special_values(const ToleranceTiers& tiers) {
  VerificationReport report;
  report.suite = "special-values";
  const auto start = Clock::now();
  for (const IdentityRecord& rec : special_values()) {
    const auto t0 = Clock::now();
    const bool boundary = rec.params.domain() == Domain::boundary;
    const double tol = boundary ? tiers.quadrature : tiers.direct;
    const std::string detail = rec.label + ": exact form vs " + (boundary ? "quad-eq22" : "direct-sum");
    try {
      const Evaluation e = special_value_route(rec);
      report.entries.push_back(
          ReportEntry::compare(rec.id, rec.params, rec.expected_value(), e.value, tol, detail, seconds_since(t0)));
    } catch (const NumericError& err) {
      report.entries.push_back(
          ReportEntry::failure(rec.id, rec.params, tol, detail + ": " + err.what(), seconds_since(t0)));
    }
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

std::vector<SeriesParams> default_cross_grid() {
  std::vector<SeriesParams> grid;
  for (int n = 0; n <= 3; ++n)
    for (double x : {-6.0, -1.0, -0.25, 0.5, 1.0, 3.0, 6.0}) grid.push_back({n, 1, x});
  for (int n = 4; n <= 5; ++n)
    for (double x : {-1.0, 1.0, 6.0}) grid.push_back({n, 1, x});
  grid.push_back({2, 1, kRadius});
  grid.push_back({3, 1, kRadius});
  grid.push_back({0, 1, 0.0});
  grid.push_back({2, 1, 0.0});
  grid.push_back({3, 1, 0.0});
  for (int n = 0; n <= 3; ++n) grid.push_back({n, 1, {1.0, 1.0}});
  grid.push_back({2, 1, {-2.0, 3.0}});
  grid.push_back({2, 1, {0.0, 4.0}});
  for (int n = 1; n <= 3; ++n)
    for (double x : {-1.0, 1.0, 20.0}) grid.push_back({n, 2, x});
  grid.push_back({1, 3, 1.0});
  grid.push_back({1, 3, 100.0});
  grid.push_back({2, 3, 1.0});
  grid.push_back({2, 3, 100.0});
  grid.push_back({3, 3, 100.0});
  grid.push_back({2, 3, -200.0});
  return grid;
}

VerificationReport run_cross_routes(const std::vector<SeriesParams>& grid, const ToleranceTiers& tiers) {
  VerificationReport report;
  report.suite = "cross-routes";
  const auto start = Clock::now();

  // Flatten (point, route) pairs so the whole workload is one parallel grid.
  struct Job {
    std::size_t point;
    Route route;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (const Route& r : applicable_routes(grid[i])) jobs.push_back({i, r});

  std::vector<PointResult> results(jobs.size());
  std::vector<double> times(jobs.size());
  const EvalOptions opts;
  const auto count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long j = 0; j < count; ++j) {
    const auto t0 = Clock::now();
    const Job& job = jobs[static_cast<std::size_t>(j)];
    results[static_cast<std::size_t>(j)] = evaluate_point(grid[job.point], job.route, opts);
    times[static_cast<std::size_t>(j)] = seconds_since(t0);
  }

  std::size_t j = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t first = j;
    while (j < jobs.size() && jobs[j].point == i) ++j;
    const SeriesParams& p = grid[i];
    const std::string point_id = "n" + std::to_string(p.n) + "_m" + std::to_string(p.m) + "_x" + format_x(p.x);
    for (std::size_t a = first; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        const std::string id = point_id + ":" + route_label(jobs[a].route) + "~" + route_label(jobs[b].route);
        const double tol = pair_tolerance(jobs[a].route, jobs[b].route, tiers);
        const double t = times[a] + times[b];
        const PointResult& ra = results[a];
        const PointResult& rb = results[b];
        if (!ra.ok || !rb.ok) {
          report.entries.push_back(ReportEntry::failure(id, p, tol, ra.ok ? rb.message : ra.message, t));
          continue;
        }
        report.entries.push_back(ReportEntry::compare(id, p, ra.eval.value, rb.eval.value, tol,
                                                      route_label(jobs[a].route) + " vs " + route_label(jobs[b].route),
                                                      t));
      }
    }
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

VerificationReport run_borwein_girgensohn(double tol) {
  VerificationReport report;
  report.suite = "borwein-girgensohn";
  const auto start = Clock::now();
  for (const IdentityRecord& rec : special_values()) {
    if (!rec.numerically_conjectured) continue;
    const double expected = rec.expected_value();
    const std::string note = rec.label + " (first found numerically)";
    auto add = [&](const std::string& suffix, const char* route, auto&& compute) {
      const auto t0 = Clock::now();
      try {
        const Evaluation e = compute();
        report.entries.push_back(ReportEntry::compare(rec.id + ":" + suffix, rec.params, expected, e.value, tol,
                                                      note + ": exact form vs " + route, seconds_since(t0)));
      } catch (const NumericError& err) {
        report.entries.push_back(
            ReportEntry::failure(rec.id + ":" + suffix, rec.params, tol, note + ": " + err.what(), seconds_since(t0)));
      }
    };
    add("direct-sum", "direct-sum", [&] { return sum_direct(rec.params, {1e-15, default_max_terms()}); });
    add("closed-form", "closed-form", [&] { return evaluate(rec.params, {Method::closed_form, std::nullopt}); });
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

VerificationReport run_polylog_factorization(double tol) {
  VerificationReport report;
  report.suite = "polylog";
  const auto start = Clock::now();
  std::vector<cplx> points;
  for (int k = 0; k < 12; ++k) {
    const double radius = 0.15 + 0.75 * k / 11.0;
    points.push_back(std::polar(radius, 0.37 + 2.0 * 3.14159265358979323846 * k / 12.0));
  }
  for (int n = 2; n <= 4; ++n) {
    for (int m : {2, 3, 4, 6}) {
      for (std::size_t k = 0; k < points.size(); ++k) {
        const cplx z = points[k];
        const auto t0 = Clock::now();
        const std::string id = "li" + std::to_string(n) + "_m" + std::to_string(m) + "_z" + std::to_string(k);
        try {
          const cplx folded = li_factorized(n, z, m);
          const cplx direct = li(n, std::pow(z, m));
          report.entries.push_back(ReportEntry::compare(id, {n, m, z}, folded, direct, tol,
                                                        "factorized Li_n vs Li_n(z^m)", seconds_since(t0)));
        } catch (const NumericError& err) {
          report.entries.push_back(ReportEntry::failure(id, {n, m, z}, tol, err.what(), seconds_since(t0)));
        }
      }
    }
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

VerificationReport run_all(const std::optional<double>& uniform_tol) {
  const ToleranceTiers tiers = uniform_tol ? ToleranceTiers::uniform(*uniform_tol) : ToleranceTiers{};
  VerificationReport all;
  all.suite = "all";
  all.append(run_special_values(tiers), "special-values");
  all.append(run_cross_routes(default_cross_grid(), tiers), "cross-routes");
  all.append(run_borwein_girgensohn(uniform_tol.value_or(1e-12)), "borwein-girgensohn");
  all.append(run_polylog_factorization(uniform_tol.value_or(1e-12)), "polylog");
  return all;
}

}  // namespace ibs
