#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace ibs {

/// A small immutable expression tree over rationals, pi, log, sqrt, cbrt,
/// arctan and arccot, evaluated in binary64. Used to write exact forms of
/// special values without a symbolic engine.
class Expr {
 public:
  enum class Op { rational, pi, add, sub, mul, div, neg, log, sqrt, cbrt, atan, acot, powi };

  static Expr rational(std::int64_t num, std::int64_t den = 1);
  static Expr pi();

  double eval() const;
  std::string render() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  friend Expr log(const Expr& a);
  friend Expr sqrt(const Expr& a);
  friend Expr cbrt(const Expr& a);
  friend Expr atan(const Expr& a);
  friend Expr acot(const Expr& a);
  friend Expr pow(const Expr& a, int exponent);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, Expr lhs, Expr rhs);
  static Expr make(Op op, Expr arg);

  std::shared_ptr<const Node> node_;
};

/// Integer literal shorthand.
inline Expr lit(std::int64_t v) { return Expr::rational(v); }
inline Expr frac(std::int64_t num, std::int64_t den) { return Expr::rational(num, den); }

}  // namespace ibs
