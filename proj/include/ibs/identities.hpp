#pragma once

#include <span>
#include <string>

#include "ibs/expr.hpp"
#include "ibs/types.hpp"

namespace ibs {

/// One explicit special value S(n,1;x) = <exact form>.
struct IdentityRecord {
  std::string id;      // stable key, e.g. "s2_1_at_27_4"
  std::string label;   // human-readable description
  SeriesParams params;
  Expr expected;
  /// Part of the subset that was first found numerically (integer relation
  /// search) before a proof was available.
  bool numerically_conjectured = false;

  double expected_value() const { return expected.eval(); }
};

/// The eleven special values, compiled into the library.
std::span<const IdentityRecord> special_values();

const IdentityRecord* find_identity(std::string_view id);

}  // namespace ibs
