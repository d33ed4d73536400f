#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ibs {

enum class ErrorKind {
  domain,             // argument outside the convergence disk
  argument,           // malformed or inconsistent argument
  not_applicable,     // route cannot evaluate these parameters
  pole,               // evaluation at a pole (e.g. Li_1 at z = 1)
  no_convergence,     // term budget exhausted
  tolerance_not_met,  // quadrature subdivisions exhausted
  branch_failure,     // complex branch consistency check failed
  unbounded_limit,    // an integration limit diverges (x -> 0)
  non_finite,         // NaN or infinity where a finite result is required
};

std::string_view to_string(ErrorKind kind) noexcept;

class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ibs
