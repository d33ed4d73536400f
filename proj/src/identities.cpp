#include "ibs/identities.hpp"

#include <vector>

namespace ibs {

namespace {

std::vector<IdentityRecord> build_registry() {
  const Expr pi = Expr::pi();
  const Expr log2 = log(lit(2));
  const Expr sqrt3 = sqrt(lit(3));
  const Expr c = cbrt(lit(2));                   // 2^(1/3)
  const Expr c4 = lit(2) * c;                    // 2^(4/3)
  const Expr arctan_at_6 = atan(sqrt3 / (c4 - lit(1)));
  const Expr log_at_6 = log(c - lit(1));
  const Expr arccot_q = acot(lit(2) * sqrt3 + sqrt(lit(7)));
  const Expr r69 = sqrt(lit(69));
  const Expr big = cbrt(lit(100) + lit(12) * r69);
  const Expr tau = cbrt((lit(25) + lit(3) * r69) / lit(2));
  const Expr tau2 = pow(tau, 2);
  const Expr tau3 = pow(tau, 3);
  const Expr tau4 = pow(tau, 4);
  const Expr quad_tau = lit(1) - tau + tau2;
  const Expr one_tau3 = lit(1) + tau3;

  std::vector<IdentityRecord> r;
  r.push_back({"s2_1_at_27_4", "S(2,1;27/4), boundary value", {2, 1, 27.0 / 4.0},
               lit(2) * pow(pi, 2) / lit(3) - lit(2) * pow(log2, 2)});
  r.push_back({"s2_1_at_6", "S(2,1;6)", {2, 1, 6.0},
               lit(6) * pow(arctan_at_6, 2) - frac(1, 2) * pow(log_at_6, 2)});
  r.push_back({"s2_1_at_1_2", "S(2,1;1/2)", {2, 1, 0.5},
               pow(pi, 2) / lit(24) - frac(1, 2) * pow(log2, 2), true});
  r.push_back({"s2_1_at_1", "S(2,1;1)", {2, 1, 1.0},
               lit(6) * pow(atan(sqrt3 / (lit(1) - big)), 2) -
                   frac(1, 2) * pow(log(lit(12) * (lit(9) + r69) / pow(lit(2) + big, 3)), 2)});
  r.push_back({"s2_1_at_m1_4", "S(2,1;-1/4)", {2, 1, -0.25},
               lit(6) * pow(arccot_q, 2) - frac(1, 2) * pow(log2, 2)});
  r.push_back({"s1_1_at_1_2", "S(1,1;1/2)", {1, 1, 0.5}, pi / lit(10) - frac(1, 5) * log2, true});
  r.push_back({"s1_1_at_6", "S(1,1;6)", {1, 1, 6.0},
               sqrt3 * c4 * (lit(1) + c) * arctan_at_6 - c * (lit(1) - c) * log_at_6});
  r.push_back({"s0_1_at_1_2", "S(0,1;1/2)", {0, 1, 0.5},
               frac(2, 25) - frac(6, 125) * log2 + frac(11, 250) * pi, true});
  r.push_back({"s0_1_at_m1_4", "S(0,1;-1/4)", {0, 1, -0.25},
               frac(-1, 28) - frac(3, 32) * log2 + lit(39) / (lit(112) * sqrt(lit(7))) * arccot_q, true});
  r.push_back({"s0_1_at_6", "S(0,1;6)", {0, 1, 6.0},
               lit(2) * sqrt(lit(240) + lit(96) * c + lit(75) * pow(c, 2)) * arctan_at_6 +
                   c * (lit(4) * c - lit(5)) * log_at_6 + lit(8)});
  r.push_back({"s0_1_at_1", "S(0,1;1), in tau = ((25 + 3 sqrt69)/2)^(1/3)", {0, 1, 1.0},
               (lit(36) * sqrt(lit(23)) * tau / (lit(529) * quad_tau) -
                lit(18) * sqrt3 * (lit(1) - tau2) * tau / (lit(23) * pow(quad_tau, 2))) *
                       atan(sqrt3 / (lit(2) * tau - lit(1))) +
                   (lit(9) * tau * (lit(1) - lit(2) * tau - lit(2) * tau3 + tau4) / (lit(23) * pow(one_tau3, 2)) -
                    lit(6) * r69 * (lit(1) - tau) * tau / (lit(529) * one_tau3)) *
                       log(one_tau3 / pow(lit(1) + tau, 3)) +
                   lit(108) * tau3 / (lit(23) * pow(one_tau3, 2))});
  return r;
}

}  // namespace

std::span<const IdentityRecord> special_values() {
  static const std::vector<IdentityRecord> registry = build_registry();
  return registry;
}

const IdentityRecord* find_identity(std::string_view id) {
  for (const IdentityRecord& rec : special_values())
    if (rec.id == id) return &rec;
  return nullptr;
}

}  // namespace ibs
