#ifndef HCONV_ORACLE_HPP
#define HCONV_ORACLE_HPP

#include <optional>
#include <string_view>

#include "hconv/classes.hpp"
#include "hconv/moments.hpp"
#include "hconv/quadrature.hpp"

namespace hconv {

/// Tolerance used for every ground-truth integral. The relative part keeps
/// large integrals above the 50*eps roundoff floor of the Kronrod rule.
inline constexpr Tolerance kOracleTolerance{1e-12, 1e-13};

/// lambda (alpha f(a) + (1-alpha) f(b)) + (1-lambda) f(alpha a + (1-alpha) b).
double rule_value(const RealFn& f, double a, double b, const RuleParams& rp);

/// (1/(b-a)) int_a^b f, by the oracle integrator.
double mean_value(const RealFn& f, double a, double b);

/// |rule_value - mean_value| for tf.f on [tf.a, tf.b]. This is the quantity
/// every bound estimates.
double lhs_error(const TestFunction& tf, const RuleParams& rp);

/// Both sides of the kernel representation of the rule error:
///   rule - mean = (b-a) [ int_0^{1-a} (t - a l) f'(tb + (1-t)a) dt
///                       + int_{1-a}^1 (t - 1 + l(1-a)) f'(tb + (1-t)a) dt ].
/// The left side uses only f, the right side only f'.
struct IdentitySides {
  double rule_minus_mean;
  double kernel_integral;
  double residual;
};

IdentitySides lemma_identity_sides(const RealFn& f, const RealFn& f_prime, double a,
                                   double b, const RuleParams& rp);
double lemma_identity_residual(const TestFunction& tf, const RuleParams& rp);

enum class HadamardVariant {
  Classical,      // convex:            f(m) <= mean <= (f(a)+f(b))/2
  SConvex,        // s-convex:   2^{s-1} f(m) <= mean <= (f(a)+f(b))/(s+1)
  GodunovaLevin,  // 1/t modulus:       f(m) <= 4 mean
  PFunction,      // constant modulus:  f(m) <= 2 mean <= 2(f(a)+f(b))
  HConvex,        // general h:  f(m)/(2h(1/2)) <= mean <= (f(a)+f(b)) int h
};

std::string_view to_string(HadamardVariant v);
/// DomainError on unknown names.
HadamardVariant parse_hadamard_variant(std::string_view name);

struct HadamardReport {
  double left = 0.0;
  double middle = 0.0;
  std::optional<double> right;  // absent for Godunova-Levin, or when h is not integrable
  bool holds = false;
};

/// Evaluates the Hermite-Hadamard chain of the given variant for f on
/// [a, b]. The modulus selects the class: Classical needs t, SConvex t^s,
/// GodunovaLevin 1/t, PFunction 1; HConvex accepts any modulus.
/// ClassMismatch otherwise; DegenerateModulus if h(1/2) = 0. Holds when
/// each link is satisfied within 1e-10 (1 + |middle|).
HadamardReport hadamard_check(const RealFn& f, double a, double b, HadamardVariant variant,
                              const HModulus& h);

/// hadamard_check on tf.f, reading the certificate's modulus as the class
/// of f itself.
HadamardReport hadamard_check(const TestFunction& tf, HadamardVariant variant);

}  // namespace hconv

#endif  // HCONV_ORACLE_HPP
