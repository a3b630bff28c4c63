#include "hconv/closed_form.hpp"

#include <cmath>

#include "hconv/errors.hpp"
#include "hconv/moments.hpp"

namespace hconv {
namespace {

double conjugate_of(double q) {
  if (!(q > 1.0)) throw DomainError("Hölder-type bound requires q > 1");
  return q / (q - 1.0);
}

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("s must lie in (0, 1]");
}

void require_q(double q) {
  if (!(q >= 1.0)) throw DomainError("q must be >= 1");
}

}  // namespace

DerivativeSamples DerivativeSamples::from(const TestFunction& tf) {
  const double a = tf.a();
  const double b = tf.b();
  return {b - a,
          std::abs(tf.f_prime(a)),
          std::abs(tf.f_prime(b)),
          std::abs(tf.f_prime((a + b) / 2.0)),
          std::abs(tf.f_prime((3.0 * a + b) / 4.0)),
          std::abs(tf.f_prime((a + 3.0 * b) / 4.0))};
}

namespace closed_form {

double alomari14(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  require_q(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double k = std::pow(2.0, 1.0 - s);
  return d.width / 8.0 * std::pow(2.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q) *
         (std::pow((k + 1.0) * B + k * A, 1.0 / q) +
          std::pow((k + 1.0) * A + k * B, 1.0 / q));
}

double alomari14a(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  const double p = conjugate_of(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double k = std::pow(2.0, 1.0 - s);
  return d.width / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) *
         std::pow(1.0 / (s + 1.0), 2.0 / q) *
         (std::pow((k + s + 1.0) * A + k * B, 1.0 / q) +
          std::pow((k + s + 1.0) * B + k * A, 1.0 / q));
}

double sarikaya15(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  const double p = conjugate_of(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double M = std::pow(d.at_mid, q);
  return d.width / 12.0 *
         std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)), 1.0 / p) *
         (std::pow((M + A) / (s + 1.0), 1.0 / q) + std::pow((M + B) / (s + 1.0), 1.0 / q));
}

double kirmaci16(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  conjugate_of(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double M = std::pow(d.at_mid, q);
  return d.width / 2.0 * std::pow((q - 1.0) / (2.0 * (2.0 * q - 1.0)), (q - 1.0) / q) *
         std::pow(1.0 / (s + 1.0), 1.0 / q) *
         (std::pow(M + A, 1.0 / q) + std::pow(M + B, 1.0 / q));
}

double classical_simpson(double width, double f4_sup) {
  if (!(f4_sup >= 0.0)) throw DomainError("classical_simpson: sup |f''''| must be >= 0");
  return std::pow(width, 4) / 2880.0 * f4_sup;
}

double simpson_powermean_sconvex(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  require_q(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double den = 3.0 * std::pow(6.0, s + 1.0) * (s + 1.0) * (s + 2.0);
  const double c1 = ((2.0 * s + 1.0) * std::pow(3.0, s + 1.0) + 2.0) / den;
  const double c2 = (2.0 * std::pow(5.0, s + 2.0) + (s - 4.0) * std::pow(6.0, s + 1.0) -
                     (2.0 * s + 7.0) * std::pow(3.0, s + 1.0)) /
                    den;
  return d.width / 2.0 * pow_or_one(5.0 / 36.0, 1.0 - 1.0 / q) *
         (std::pow(c1 * B + c2 * A, 1.0 / q) + std::pow(c2 * B + c1 * A, 1.0 / q));
}

double midpoint_powermean_sconvex(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  require_q(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double k = std::pow(2.0, 1.0 - s);
  const double small = k * (s + 1.0) / 2.0;
  const double large = k * (std::pow(2.0, s + 2.0) - s - 3.0) / 2.0;
  return d.width / 8.0 * std::pow(2.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q) *
         (std::pow(small * B + large * A, 1.0 / q) + std::pow(small * A + large * B, 1.0 / q));
}

double trapezoid_powermean_sconvex_loose(const DerivativeSamples& d, double s,
                                         double q) {
  require_s(s);
  require_q(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double k = std::pow(2.0, s + 1.0) + 1.0;
  return d.width / 8.0 *
         std::pow(std::pow(2.0, 1.0 - s) / ((s + 1.0) * (s + 2.0)), 1.0 / q) *
         (std::pow(B + A * k, 1.0 / q) + std::pow(A + B * k, 1.0 / q));
}

double simpson_holder_sconvex(const DerivativeSamples& d, double s, double q) {
  return sarikaya15(d, s, q);
}

double half_holder_sconvex(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  const double p = conjugate_of(q);
  const double A = std::pow(d.at_a, q);
  const double B = std::pow(d.at_b, q);
  const double M = std::pow(d.at_mid, q);
  return d.width / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) *
         (std::pow((M + A) / (s + 1.0), 1.0 / q) + std::pow((M + B) / (s + 1.0), 1.0 / q));
}

double half_holder_concave(const DerivativeSamples& d, double s, double q) {
  require_s(s);
  const double p = conjugate_of(q);
  return d.width / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) *
         std::pow(0.5, (1.0 - s) / q) * (d.at_three_quarter + d.at_quarter);
}

double concave_midpoint_simplified(const DerivativeSamples& d, double q) {
  const double p = conjugate_of(q);
  return d.width / 2.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) * d.at_mid;
}

}  // namespace closed_form
}  // namespace hconv
