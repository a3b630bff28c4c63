#include "hconv/means.hpp"

#include <cmath>

#include "hconv/errors.hpp"

namespace hconv {
namespace {

constexpr double kSlack = 1e-9;

void require_interval(double a, double b) {
  if (!(a > 0.0 && a < b && std::isfinite(b))) throw DomainError("requires 0 < a < b");
}

void require_exponents(double q, double s) {
  if (!(q >= 1.0 && std::isfinite(q))) throw DomainError("requires q >= 1");
  if (!(s > 0.0 && s < 1.0 / q)) throw DomainError("requires s in (0, 1/q)");
}

MeanInequality judged(double lhs, double rhs) { return {lhs, rhs, lhs <= rhs + kSlack}; }

struct EpsPair {
  double left;
  double right;
};

EpsPair active_eps(const RuleParams& rp) {
  const EpsilonCoeffs e = epsilon_coeffs(rp);
  const auto pair = [](double l, double r) {
    return EpsPair{detail::nonnegative(l, "eps"), detail::nonnegative(r, "eps")};
  };
  switch (branch_select(rp)) {
    case CaseBranch::MidOrder:
      return pair(e.eps1, e.eps3);
    case CaseBranch::RightOfUpper:
      return pair(e.eps1, e.eps4);
    case CaseBranch::LeftOfLower:
      return pair(e.eps2, e.eps3);
  }
  return {0.0, 0.0};
}

RuleParams holder_params(double alpha, double lambda, double p, double q) {
  if (!(q > 1.0)) throw DomainError("requires p, q > 1");
  return RuleParams::make(alpha, lambda, q, p);
}

}  // namespace

double weighted_arith_mean(double a, double b, double alpha) {
  return alpha * a + (1.0 - alpha) * b;
}

double arith_mean(double a, double b) { return weighted_arith_mean(a, b, 0.5); }

double log_mean(double a, double b) {
  if (a == 0.0 || b == 0.0) throw DomainError("log_mean: requires ab != 0");
  if (std::abs(a) == std::abs(b)) throw DomainError("log_mean: requires |a| != |b|");
  return (b - a) / (std::log(std::abs(b)) - std::log(std::abs(a)));
}

double p_log_mean(double a, double b, double p) {
  if (p == 0.0 || p == -1.0) throw DomainError("p_log_mean: p must not be 0 or -1");
  if (!(a > 0.0 && b > 0.0)) throw DomainError("p_log_mean: requires a, b > 0");
  if (a == b) throw DomainError("p_log_mean: requires a != b");
  return std::pow((std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / ((p + 1.0) * (b - a)),
                  1.0 / p);
}

double power_rule_error(double a, double b, double alpha, double lambda, double s) {
  require_interval(a, b);
  if (!(s > 0.0)) throw DomainError("requires s > 0");
  const double e = s + 1.0;
  const double rule = lambda * weighted_arith_mean(std::pow(a, e), std::pow(b, e), alpha) +
                      (1.0 - lambda) * std::pow(weighted_arith_mean(a, b, alpha), e);
  return std::abs(rule - std::pow(p_log_mean(a, b, e), e));
}

TestFunction power_test_function(double a, double b, double q, double s) {
  const double e = s + 1.0;
  return TestFunction::create([e](double t) { return std::pow(t, e); },
                              [s, e](double t) { return e * std::pow(t, s); }, a, b,
                              ClassCertificate::make(Convexity::HConvex,
                                                     HModulus::power(q * s), q));
}

MeanInequality proposition1_check(double a, double b, double alpha, double lambda, double q,
                                  double s) {
  require_interval(a, b);
  require_exponents(q, s);
  const RuleParams rp = RuleParams::make(alpha, lambda, q);
  const StarCoeffs st = mu_eta_star(rp, q * s);
  const GammaCoeffs g = gamma_coeffs(rp);
  const UpsilonCoeffs u = upsilon_coeffs(rp);
  const double bq = std::pow(b, s * q);
  const double aq = std::pow(a, s * q);
  const double e = 1.0 - 1.0 / q;
  const auto term = [&](double coef, double wb, double wa) {
    return pow_or_one(detail::nonnegative(coef, "coefficient"), e) *
           std::pow(wb * bq + wa * aq, 1.0 / q);
  };

  double left = 0.0;
  double right = 0.0;
  switch (branch_select(rp)) {
    case CaseBranch::MidOrder:
      left = term(g.gamma2, st.mu[0], st.mu[1]);
      right = term(u.upsilon2, st.eta[2], st.eta[3]);
      break;
    case CaseBranch::RightOfUpper:
      left = term(g.gamma2, st.mu[0], st.mu[1]);
      right = term(u.upsilon1, st.eta[0], st.eta[1]);
      break;
    case CaseBranch::LeftOfLower:
      left = term(g.gamma1, st.mu[2], st.mu[3]);
      right = term(u.upsilon2, st.eta[2], st.eta[3]);
      break;
  }
  const double rhs = (b - a) * (s + 1.0) * (left + right);
  return judged(power_rule_error(a, b, alpha, lambda, s), rhs);
}

MeanInequality proposition2_check(double a, double b, double alpha, double lambda, double p,
                                  double q, double s) {
  require_interval(a, b);
  require_exponents(q, s);
  const RuleParams rp = holder_params(alpha, lambda, p, q);
  const EpsPair eps = active_eps(rp);
  const double node = std::pow(weighted_arith_mean(a, b, alpha), s * q);
  const double theta1 = node + std::pow(a, s * q);
  const double theta2 = node + std::pow(b, s * q);
  const double rhs =
      (b - a) * std::pow(1.0 / (p + 1.0), 1.0 / p) * (s + 1.0) *
      std::pow(1.0 / (q * s + 1.0), 1.0 / q) *
      (std::pow(1.0 - alpha, 1.0 / q) * std::pow(eps.left, 1.0 / p) * std::pow(theta1, 1.0 / q) +
       std::pow(alpha, 1.0 / q) * std::pow(eps.right, 1.0 / p) * std::pow(theta2, 1.0 / q));
  return judged(power_rule_error(a, b, alpha, lambda, s), rhs);
}

MeanInequality proposition2_naive_check(double a, double b, double alpha, double lambda,
                                        double p, double q, double s) {
  require_interval(a, b);
  require_exponents(q, s);
  const RuleParams rp = holder_params(alpha, lambda, p, q);
  const EpsPair eps = active_eps(rp);
  const double node = std::pow(weighted_arith_mean(a, b, alpha), s * q);
  const double theta1 = node + std::pow(a, s * q);
  const double theta2 = node + std::pow(b, s * q);
  const double rhs = (b - a) * std::pow(1.0 / (p + 1.0), 1.0 / p) *
                     std::pow(s + 1.0, 1.0 - 1.0 / q) *
                     (std::pow(1.0 - alpha, 1.0 / q) * std::pow(eps.left, 1.0 / p) * theta1 +
                      std::pow(alpha, 1.0 / q) * std::pow(eps.right, 1.0 / p) * theta2);
  return judged(power_rule_error(a, b, alpha, lambda, s), rhs);
}

}  // namespace hconv
