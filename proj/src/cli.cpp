#include "ibs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ibs/error.hpp"
#include "ibs/parallel.hpp"
#include "ibs/routes.hpp"
#include "ibs/verify.hpp"

namespace ibs::cli {

namespace {

using nlohmann::json;

std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

struct Request {
  int n = 2;
  int m = 1;
  std::string x = "0";
  std::string method = "auto";
  std::string inner;
  double tol = 0.0;  // 0: library defaults
  std::string output = "text";
  std::string suite = "all";
  std::string x_from;
  std::string x_to;
  int steps = 0;
  int threads = 0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx require_complex(const std::string& text, const char* flag) {
  const auto z = parse_complex(text);
  if (!z) throw UsageError(std::string("invalid value for ") + flag + ": '" + text + "' (expected a or a+bi)");
  return *z;
}

Route route_from(const Request& req, const SeriesParams& params) {
  Route route;
  if (req.method != "auto") route.method = parse_method(req.method);
  if (!req.inner.empty()) {
    if (route.method && route.method != Method::folding)
      throw UsageError("--inner is only meaningful with --method folding");
    route.inner = parse_method(req.inner);
    if (!route.method) route.method = Method::folding;
  }
  if (!route.method) return resolve_auto(params);
  return route;
}

EvalOptions options_from(const Request& req) {
  EvalOptions opts;
  if (req.tol > 0.0) {
    opts.quadrature.abs_tol = req.tol;
    opts.quadrature.rel_tol = req.tol;
    opts.direct.rel_tol = std::min(req.tol, opts.direct.rel_tol);
  }
  return opts;
}

/// Throws NumericError(domain) naming the violated bound.
void check_domain(const SeriesParams& p) {
  p.validate();
  if (p.domain() != Domain::outside) return;
  const double ax = std::abs(p.x);
  const double r = p.radius();
  std::ostringstream msg;
  msg.precision(17);
  if (std::abs(ax - r) <= 1e-14 * r) {
    msg << "|x| = " << ax << " lies on the boundary |x| = (27/4)^" << p.m << " = " << r
        << ", where the series diverges for n <= 1 (n = " << p.n << ")";
  } else {
    msg << "|x| = " << ax << " exceeds the radius of convergence (27/4)^" << p.m << " = " << r;
  }
  throw NumericError(ErrorKind::domain, msg.str());
}

int exit_for(ErrorKind kind) {
  return kind == ErrorKind::not_applicable || kind == ErrorKind::argument ? exit_usage : exit_numeric;
}

json eval_json(const SeriesParams& p, const Route& route, const Evaluation& e) {
  return {
      {"n", p.n},
      {"m", p.m},
      {"x", format_complex(p.x)},
      {"x_re", p.x.real()},
      {"x_im", p.x.imag()},
      {"value", format_complex(e.value)},
      {"value_re", number(e.value.real())},
      {"value_im", number(e.value.imag())},
      {"abs_error_est", number(e.abs_error_est)},
      {"method", route_label(route)},
      {"work", e.work},
      {"discarded_imag", e.discarded_imag},
  };
}

constexpr const char* kCsvHeader = "x,value_re,value_im,abs_error_est,method,work\n";

std::string csv_row(const SeriesParams& p, const Route& route, const Evaluation& e) {
  return csv_field(format_complex(p.x)) + "," + format_real(e.value.real()) + "," + format_real(e.value.imag()) + "," +
         format_real(e.abs_error_est) + "," + csv_field(route_label(route)) + "," + std::to_string(e.work) + "\n";
}

int cmd_eval(const Request& req, std::ostream& out) {
  const SeriesParams p{req.n, req.m, require_complex(req.x, "--x")};
  check_domain(p);
  const Route route = route_from(req, p);
  const Evaluation e = evaluate(p, route, options_from(req));
  if (req.output == "json") {
    out << eval_json(p, route, e).dump(2) << "\n";
  } else if (req.output == "csv") {
    out << kCsvHeader << csv_row(p, route, e);
  } else {
    out << "S(" << p.n << "," << p.m << ";" << format_complex(p.x) << ")\n"
        << "value          " << format_complex(e.value) << "\n"
        << "abs_error_est  " << format_real(e.abs_error_est) << "\n"
        << "method         " << route_label(route) << "\n"
        << "work           " << e.work << "\n";
    if (e.discarded_imag != 0.0) out << "discarded_imag " << format_real(e.discarded_imag) << "\n";
  }
  return exit_ok;
}

std::string verify_csv(const VerificationReport& r) {
  std::string s = "id,n,m,x,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,tol,pass\n";
  for (const auto& e : r.entries) {
    s += csv_field(e.id) + "," + std::to_string(e.params.n) + "," + std::to_string(e.params.m) + "," +
         csv_field(format_complex(e.params.x)) + "," + format_real(e.lhs.real()) + "," + format_real(e.lhs.imag()) +
         "," + format_real(e.rhs.real()) + "," + format_real(e.rhs.imag()) + "," + format_real(e.abs_diff) + "," +
         format_real(e.tol) + "," + (e.pass ? "true" : "false") + "\n";
  }
  return s;
}

int cmd_verify(const Request& req, std::ostream& out, std::ostream& err) {
  std::optional<double> tol;
  if (req.tol > 0.0) tol = req.tol;
  const ToleranceTiers tiers = tol ? ToleranceTiers::uniform(*tol) : ToleranceTiers{};
  VerificationReport report;
  if (req.suite == "all") {
    report = run_all(tol);
  } else if (req.suite == "special-values") {
    report = run_special_values(tiers);
  } else if (req.suite == "cross-routes") {
    report = run_cross_routes(default_cross_grid(), tiers);
  } else if (req.suite == "borwein-girgensohn") {
    report = run_borwein_girgensohn(tol.value_or(1e-12));
  } else {
    report = run_polylog_factorization(tol.value_or(1e-12));
  }
  if (req.output == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (req.output == "csv") {
    out << verify_csv(report);
  } else {
    out << to_text(report);
  }
  if (!report.all_passed()) {
    err << "verify: " << report.failed() << " of " << report.entries.size() << " entries failed\n";
    return exit_verify;
  }
  return exit_ok;
}

int cmd_table(const Request& req, std::ostream& out, std::ostream& err) {
  const cplx from = require_complex(req.x_from, "--x-from");
  const cplx to = require_complex(req.x_to, "--x-to");
  if (req.steps < 1) throw UsageError("--steps must be at least 1");
  if (req.steps == 1 && from != to) throw UsageError("--steps 1 requires --x-from equal to --x-to");

  std::vector<SeriesParams> points;
  points.reserve(static_cast<std::size_t>(req.steps));
  for (int i = 0; i < req.steps; ++i) {
    const cplx x = req.steps == 1 ? from : from + (to - from) * (static_cast<double>(i) / (req.steps - 1));
    points.push_back({req.n, req.m, x});
  }
  for (const auto& p : points) check_domain(p);

  std::vector<Route> routes;
  for (const auto& p : points) routes.push_back(route_from(req, p));

  // Points sharing a resolved route are evaluated together on the parallel grid.
  std::vector<PointResult> results(points.size());
  const EvalOptions opts = options_from(req);
  std::vector<bool> done(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> idx;
    std::vector<SeriesParams> batch;
    for (std::size_t j = i; j < points.size(); ++j) {
      if (!done[j] && routes[j] == routes[i]) {
        idx.push_back(j);
        batch.push_back(points[j]);
        done[j] = true;
      }
    }
    const auto batch_results = evaluate_grid(batch, routes[i], opts);
    for (std::size_t k = 0; k < idx.size(); ++k) results[idx[k]] = batch_results[k];
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!results[i].ok) {
      err << "error: x = " << format_complex(points[i].x) << ": " << results[i].message << "\n";
      return exit_for(results[i].error);
    }
  }

  if (req.output == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) rows.push_back(eval_json(points[i], routes[i], results[i].eval));
    out << json{{"n", req.n}, {"m", req.m}, {"rows", std::move(rows)}}.dump(2) << "\n";
  } else if (req.output == "csv") {
    out << kCsvHeader;
    for (std::size_t i = 0; i < points.size(); ++i) out << csv_row(points[i], routes[i], results[i].eval);
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%-48s %-48s %-12s %s\n", "x", "value", "abs_err_est", "method");
    out << line;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Evaluation& e = results[i].eval;
      std::snprintf(line, sizeof line, "%-48s %-48s %-12.3g %s\n", format_complex(points[i].x).c_str(),
                    format_complex(e.value).c_str(), e.abs_error_est, route_label(routes[i]).c_str());
      out << line;
    }
  }
  return exit_ok;
}

}  // namespace

std::optional<cplx> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return cplx{*re, 0.0};
  }
  text.remove_suffix(1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? text : text.substr(split);
  double re = 0.0;
  if (!re_part.empty()) {
    const auto v = parse_real(re_part);
    if (!v) return std::nullopt;
    re = *v;
  }
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    const auto v = parse_real(im_part);
    if (!v) return std::nullopt;
    im = *v;
  }
  return cplx{re, im};
}

std::string format_complex(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and cross-verify the inverse binomial series S(n,m;x) = sum x^k / (k^n C(3mk,mk))",
               "ibseries"};
  app.require_subcommand(1);
  Request req;
  app.add_option("--threads", req.threads, "OpenMP threads for grids and suites (0: runtime default)")
      ->check(CLI::NonNegativeNumber);

  const std::vector<std::string> methods{"auto", "direct-sum", "closed-form", "quad-eq22",
                                         "quad-eq21", "folding", "pfq"};
  const std::vector<std::string> inners{"direct-sum", "closed-form", "quad-eq22"};
  const std::vector<std::string> outputs{"text", "json", "csv"};

  auto add_series_options = [&](CLI::App* sub) {
    sub->add_option("--n", req.n, "Power of k in the denominator")->check(CLI::NonNegativeNumber);
    sub->add_option("--m", req.m, "Binomial stride")->check(CLI::PositiveNumber);
    sub->add_option("--method", req.method, "Evaluation route")->check(CLI::IsMember(methods));
    sub->add_option("--inner", req.inner, "Inner route for folding")->check(CLI::IsMember(inners));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate S(n,m;x) at one point");
  add_series_options(eval);
  eval->add_option("--x", req.x, "Argument, real or a+bi")->required();
  eval->add_option("--tol", req.tol, "Quadrature and summation tolerance")->check(CLI::PositiveNumber);
  eval->add_option("--output", req.output, "text, json or csv")->check(CLI::IsMember(outputs));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", req.suite, "special-values, cross-routes, borwein-girgensohn, polylog or all")
      ->check(CLI::IsMember({"special-values", "cross-routes", "borwein-girgensohn", "polylog", "all"}));
  verify->add_option("--tol", req.tol, "One absolute tolerance for every entry")->check(CLI::PositiveNumber);
  verify->add_option("--output", req.output, "text, json or csv")->check(CLI::IsMember(outputs));

  auto* table = app.add_subcommand("table", "Tabulate S(n,m;x) on an evenly spaced grid");
  add_series_options(table);
  table->add_option("--x-from", req.x_from, "First grid point")->required();
  table->add_option("--x-to", req.x_to, "Last grid point")->required();
  table->add_option("--steps", req.steps, "Number of grid points")->required();
  table->add_option("--tol", req.tol, "Quadrature and summation tolerance")->check(CLI::PositiveNumber);
  table->add_option("--output", req.output, "text, json or csv")->check(CLI::IsMember(outputs));

  std::vector<const char*> argv{"ibseries"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (req.threads > 0) set_thread_count(req.threads);
    if (eval->parsed()) return cmd_eval(req, out);
    if (verify->parsed()) return cmd_verify(req, out, err);
    return cmd_table(req, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const NumericError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e.kind());
  }
}

}  // namespace ibs::cli
