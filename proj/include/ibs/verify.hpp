#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ibs/routes.hpp"
#include "ibs/types.hpp"

namespace ibs {

/// Absolute tolerances by the kind of comparison.
struct ToleranceTiers {
  double direct = 1e-12;      // closed form or exact form against direct summation
  double quadrature = 1e-9;   // anything involving a quadrature route
  double two_stage = 1e-8;    // anything involving quad-eq21

  static ToleranceTiers uniform(double tol) { return {tol, tol, tol}; }
  friend bool operator==(const ToleranceTiers&, const ToleranceTiers&) = default;
};

struct ReportEntry {
  std::string id;
  SeriesParams params;
  cplx lhs{};
  cplx rhs{};
  double abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;  // what was compared, or the error that stopped it
  double wall_time_s = 0.0;

  /// pass = (abs_diff <= tol).
  static ReportEntry compare(std::string id, const SeriesParams& params, cplx lhs, cplx rhs, double tol,
                             std::string detail, double wall_time_s = 0.0);
  /// A comparison that could not be carried out; never passes.
  static ReportEntry failure(std::string id, const SeriesParams& params, double tol, std::string detail,
                             double wall_time_s = 0.0);

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;
  std::string precision = "binary64";
  double wall_time_s = 0.0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  void append(const VerificationReport& other, const std::string& prefix);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_text(const VerificationReport& report);

/// Exact forms of the eleven special values against sum_direct (interior,
/// tiers.direct) or quad-eq22 (boundary, tiers.quadrature).
VerificationReport run_special_values(const ToleranceTiers& tiers = {});

/// The default 60-point grid used by run_cross_routes.
std::vector<SeriesParams> default_cross_grid();

/// Every applicable route at every grid point, compared pairwise. Points are
/// evaluated with evaluate_grid (OpenMP); the report is assembled in order.
VerificationReport run_cross_routes(const std::vector<SeriesParams>& grid, const ToleranceTiers& tiers = {});

/// The four special values first found numerically, at tightened tolerance,
/// each against both sum_direct and its closed form.
VerificationReport run_borwein_girgensohn(double tol = 1e-12);

/// li_factorized(n,z,m) against li(n,z^m) for n in {2,3,4}, m in {2,3,4,6}
/// and twelve points with |z| <= 0.9.
VerificationReport run_polylog_factorization(double tol = 1e-12);

/// special-values + cross-routes (default grid) + borwein-girgensohn + polylog.
VerificationReport run_all(const std::optional<double>& uniform_tol = std::nullopt);

}  // namespace ibs
