#include "ibs/expr.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ibs {

struct Expr::Node {
  Op op = Op::rational;
  std::int64_t num = 0;
  std::int64_t den = 1;
  int exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

double eval_node(const Expr::Op op, double a, double b, int exponent) {
  using Op = Expr::Op;
  switch (op) {
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div: return a / b;
    case Op::neg: return -a;
    case Op::log: return std::log(a);
    case Op::sqrt: return std::sqrt(a);
    case Op::cbrt: return std::cbrt(a);
    case Op::atan: return std::atan(a);
    case Op::acot: return std::atan(1.0 / a);
    case Op::powi: return std::pow(a, exponent);
    default: break;
  }
  throw std::logic_error("not an operator node");
}

int precedence(Expr::Op op) {
  using Op = Expr::Op;
  switch (op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::powi: return 4;
    default: return 5;
  }
}

}  // namespace

Expr Expr::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  auto node = std::make_shared<Node>();
  node->op = Op::rational;
  node->num = g ? num / g : num;
  node->den = g ? den / g : den;
  return Expr(std::move(node));
}

Expr Expr::pi() {
  auto node = std::make_shared<Node>();
  node->op = Op::pi;
  return Expr(std::move(node));
}

Expr Expr::make(Op op, Expr lhs, Expr rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Expr(std::move(node));
}

Expr Expr::make(Op op, Expr arg) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->lhs = std::move(arg.node_);
  return Expr(std::move(node));
}

double Expr::eval() const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::rational: return static_cast<double>(n.num) / static_cast<double>(n.den);
    case Op::pi: return std::numbers::pi;
    default: break;
  }
  const double a = Expr(n.lhs).eval();
  const double b = n.rhs ? Expr(n.rhs).eval() : 0.0;
  return eval_node(n.op, a, b, n.exponent);
}

std::string Expr::render() const {
  const Node& n = *node_;
  auto child = [&](const std::shared_ptr<const Node>& c, bool right) {
    std::string s = Expr(c).render();
    const int pc = precedence(c->op);
    const int pn = precedence(n.op);
    const bool rational_frac = c->op == Op::rational && (c->den != 1 || c->num < 0);
    if (pc < pn || (right && pc == pn && (n.op == Op::sub || n.op == Op::div)) ||
        (rational_frac && pn >= 2))
      s = "(" + s + ")";
    return s;
  };
  switch (n.op) {
    case Op::rational:
      return n.den == 1 ? std::to_string(n.num) : std::to_string(n.num) + "/" + std::to_string(n.den);
    case Op::pi: return "pi";
    case Op::add: return child(n.lhs, false) + " + " + child(n.rhs, true);
    case Op::sub: return child(n.lhs, false) + " - " + child(n.rhs, true);
    case Op::mul: return child(n.lhs, false) + "*" + child(n.rhs, true);
    case Op::div: return child(n.lhs, false) + "/" + child(n.rhs, true);
    case Op::neg: return "-" + child(n.lhs, false);
    case Op::log: return "log(" + Expr(n.lhs).render() + ")";
    case Op::sqrt: return "sqrt(" + Expr(n.lhs).render() + ")";
    case Op::cbrt: return "cbrt(" + Expr(n.lhs).render() + ")";
    case Op::atan: return "arctan(" + Expr(n.lhs).render() + ")";
    case Op::acot: return "arccot(" + Expr(n.lhs).render() + ")";
    case Op::powi: return child(n.lhs, false) + "^" + std::to_string(n.exponent);
  }
  return "?";
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::div, a, b); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Op::neg, a); }
Expr log(const Expr& a) { return Expr::make(Expr::Op::log, a); }
Expr sqrt(const Expr& a) { return Expr::make(Expr::Op::sqrt, a); }
Expr cbrt(const Expr& a) { return Expr::make(Expr::Op::cbrt, a); }
Expr atan(const Expr& a) { return Expr::make(Expr::Op::atan, a); }
Expr acot(const Expr& a) { return Expr::make(Expr::Op::acot, a); }

Expr pow(const Expr& a, int exponent) {
  Expr e = Expr::make(Expr::Op::powi, a);
  auto node = std::make_shared<Expr::Node>(*e.node_);
  node->exponent = exponent;
  return Expr(std::move(node));
}

}  // namespace ibs
