#ifndef HCONV_CLOSED_FORM_HPP
#define HCONV_CLOSED_FORM_HPP

#include "hconv/classes.hpp"

// Fixed-rule bounds written directly in terms of derivative magnitudes.
// These are the midpoint (alpha = 1/2, lambda = 0), trapezoid (1/2, 1) and
// Simpson (1/2, 1/3) specializations of the general estimates, together
// with the earlier literature bounds they are compared against. They take
// plain numbers so comparisons can sweep magnitudes without building
// functions.

namespace hconv {

/// |f'| at the nodes the fixed-rule bounds use.
struct DerivativeSamples {
  double width = 1.0;           // b - a
  double at_a = 0.0;            // |f'(a)|
  double at_b = 0.0;            // |f'(b)|
  double at_mid = 0.0;          // |f'((a+b)/2)|
  double at_quarter = 0.0;      // |f'((3a+b)/4)|
  double at_three_quarter = 0.0;  // |f'((a+3b)/4)|

  static DerivativeSamples from(const TestFunction& tf);
};

namespace closed_form {

// Literature bounds. s is the s-convexity exponent of |f'|^q.

/// Midpoint, power mean.
double alomari14(const DerivativeSamples& d, double s, double q);
/// Midpoint, Hölder (q > 1).
double alomari14a(const DerivativeSamples& d, double s, double q);
/// Simpson, Hölder (q > 1).
double sarikaya15(const DerivativeSamples& d, double s, double q);
/// Trapezoid, Hölder (q > 1).
double kirmaci16(const DerivativeSamples& d, double s, double q);
/// Simpson via the fourth derivative: (b-a)^4 / 2880 * sup |f''''|.
double classical_simpson(double width, double f4_sup);

// Specializations of the t^s power-mean estimate.

/// Simpson point.
double simpson_powermean_sconvex(const DerivativeSamples& d, double s, double q);
/// Midpoint; never larger than alomari14.
double midpoint_powermean_sconvex(const DerivativeSamples& d, double s, double q);
/// Trapezoid point with simplified coefficients. They agree with the general
/// estimate only at s = 1 and are larger for s < 1.
double trapezoid_powermean_sconvex_loose(const DerivativeSamples& d, double s,
                                         double q);

// Specializations of the t^s Hölder estimates (q > 1).

/// Simpson point. Identical to sarikaya15.
double simpson_holder_sconvex(const DerivativeSamples& d, double s, double q);
/// Midpoint and trapezoid points give the same expression:
///   (b-a)/4 (1/(p+1))^{1/p} [((M + A)/(s+1))^{1/q} + ((M + B)/(s+1))^{1/q}].
/// At lambda = 1 it is never larger than kirmaci16.
double half_holder_sconvex(const DerivativeSamples& d, double s, double q);
/// Concave case, midpoint or trapezoid point:
///   (b-a)/4 (1/(p+1))^{1/p} (1/2)^{(1-s)/q} [|f'((a+3b)/4)| + |f'((3a+b)/4)|].
double half_holder_concave(const DerivativeSamples& d, double s, double q);
/// half_holder_concave at s = 1 after bounding the quarter-point terms by
/// 2 |f'((a+b)/2)|, valid because |f'| is concave.
double concave_midpoint_simplified(const DerivativeSamples& d, double q);

}  // namespace closed_form
}  // namespace hconv

#endif  // HCONV_CLOSED_FORM_HPP
