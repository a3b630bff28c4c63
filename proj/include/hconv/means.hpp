#ifndef HCONV_MEANS_HPP
#define HCONV_MEANS_HPP

#include "hconv/classes.hpp"
#include "hconv/moments.hpp"

namespace hconv {

/// alpha a + (1 - alpha) b.
double weighted_arith_mean(double a, double b, double alpha);
/// (a + b) / 2, as the weighted mean at alpha = 1/2.
double arith_mean(double a, double b);
/// (b - a) / (ln|b| - ln|a|). DomainError if |a| = |b| or ab = 0.
double log_mean(double a, double b);
/// ((b^{p+1} - a^{p+1}) / ((p+1)(b-a)))^{1/p}. DomainError unless a, b > 0,
/// a != b and p not in {-1, 0}.
double p_log_mean(double a, double b, double p);

struct MeanInequality {
  double lhs;
  double rhs;
  bool holds;  // lhs <= rhs + 1e-9
};

/// |lambda A_alpha(a^{s+1}, b^{s+1}) + (1-lambda) A_alpha(a,b)^{s+1} - L_{s+1}^{s+1}(a,b)|,
/// the rule error for f(t) = t^{s+1} on [a, b]. Requires 0 < a < b, s > 0.
double power_rule_error(double a, double b, double alpha, double lambda, double s);

/// The power-mean estimate of power_rule_error. |f'|^q = (s+1)^q t^{qs} is
/// qs-convex, so mu*, eta* are taken at exponent qs. Requires 0 < a < b,
/// q >= 1, s in (0, 1/q); DomainError otherwise.
MeanInequality proposition1_check(double a, double b, double alpha, double lambda, double q,
                                  double s);

/// The Hölder estimate of power_rule_error with
///   theta1 = A_alpha^{sq}(a,b) + a^{sq},  theta2 = A_alpha^{sq}(a,b) + b^{sq}:
///   (b-a) (1/(p+1))^{1/p} (s+1) (1/(qs+1))^{1/q}
///     [ (1-alpha)^{1/q} eL^{1/p} theta1^{1/q} + alpha^{1/q} eR^{1/p} theta2^{1/q} ].
/// Requires 0 < a < b, p, q > 1 conjugate, s in (0, 1/q).
MeanInequality proposition2_check(double a, double b, double alpha, double lambda, double p,
                                  double q, double s);

/// A naive variant of the same estimate with (s+1)^{1-1/q},
/// theta1, theta2 not raised to 1/q and no (1/(qs+1))^{1/q} factor. Kept
/// to exhibit that this shape is not an upper bound for small a, b.
MeanInequality proposition2_naive_check(double a, double b, double alpha, double lambda,
                                        double p, double q, double s);

/// f(t) = t^{s+1} on [a, b] with |f'|^q certified h-convex for t^{qs}.
TestFunction power_test_function(double a, double b, double q, double s);

}  // namespace hconv

#endif  // HCONV_MEANS_HPP
