#ifndef HCONV_BOUNDS_HPP
#define HCONV_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hconv/classes.hpp"
#include "hconv/moments.hpp"

namespace hconv {

enum class BoundKind {
  PowerMeanHConvex,   // power-mean estimate for h-convex |f'|^q, any h
  SConvexPowerMean,   // the same estimate written with the t^s closed forms
  HolderHConvex,      // Hölder estimate for h-convex |f'|^q
  HolderHConcave,     // Hölder estimate for h-concave |f'|^q
  Iscan13,            // earlier convex-case estimate, cubic coefficient table
  Alomari14,          // midpoint, s-convex, power mean
  Alomari14a,         // midpoint, s-convex, Hölder
  Sarikaya15,         // Simpson, s-convex, Hölder
  Kirmaci16,          // trapezoid, s-convex, Hölder
  ClassicalSimpson,   // sup |f''''| based Simpson estimate
};

std::string_view to_string(BoundKind kind);
/// Inverse of to_string; DomainError on unknown names.
BoundKind parse_bound_kind(std::string_view name);

/// Right-hand side of one bound on
///   |lambda(alpha f(a) + (1-alpha) f(b)) + (1-lambda) f(alpha a + (1-alpha) b) - mean f|.
struct BoundResult {
  double value = 0.0;
  CaseBranch branch = CaseBranch::MidOrder;
  /// Named intermediate quantities (moments, coefficients, C/D/E/F, ...).
  std::vector<std::pair<std::string, double>> components;

  /// Looks up a component by name; DomainError if absent.
  double component(std::string_view name) const;
};

/// Power-mean bound for h-convex |f'|^q, q >= 1:
///   (b-a) [ g^{1-1/q} A^{1/q} + u^{1-1/q} B^{1/q} ]
/// with the (gamma, upsilon) pair chosen by the case branch and A, B the
/// h-weighted kernel moments times |f'(b)|^q and |f'(a)|^q. At q = 1 the
/// coefficient powers are taken as 1.
BoundResult bound_power_mean(const TestFunction& tf, const RuleParams& rp);

/// The t^s specialization evaluated directly from mu*, eta*. Requires an
/// h-convex certificate with modulus t^s (or t when s = 1).
BoundResult bound_sconvex_powermean(const TestFunction& tf, const RuleParams& rp,
                                    double s);

/// Hölder bound for h-convex |f'|^q, q > 1, h integrable on [0,1]:
///   (b-a) (1/(p+1))^{1/p} (int h)^{1/q} [ eL^{1/p} C^{1/q} + eR^{1/p} D^{1/q} ]
/// C and D use f' at the interior node (1-alpha) b + alpha a and at a, b.
BoundResult bound_holder_hconvex(const TestFunction& tf, const RuleParams& rp);

/// Hölder bound for h-concave |f'|^q, q > 1:
///   (b-a) (1/(2h(1/2)))^{1/q} (1/(p+1))^{1/p} [ eL^{1/p} E^{1/q} + eR^{1/p} F^{1/q} ]
/// with E, F from f' at the midpoints of [a, node] and [node, b].
BoundResult bound_holder_hconcave(const TestFunction& tf, const RuleParams& rp);

/// The power-mean bound for h = 1, written as
///   (b-a) (|f'(b)|^q + |f'(a)|^q)^{1/q} (g + u).
BoundResult bound_constant_h_corollary(const TestFunction& tf, const RuleParams& rp);

/// Earlier bounds from the literature, evaluated as stated. Fixed-parameter
/// kinds raise ParamMismatch when rp differs (alpha = 1/2 and lambda = 0,
/// 1/3 or 1). `s` defaults to the certificate's exponent (1 for h = t).
/// ClassicalSimpson needs `f4_sup`, an upper bound on |f''''| over [a,b].
BoundResult bound_prior(const TestFunction& tf, const RuleParams& rp, BoundKind kind,
                        std::optional<double> s = std::nullopt,
                        std::optional<double> f4_sup = std::nullopt);

/// Dispatches on kind to the functions above.
BoundResult evaluate_bound(const TestFunction& tf, const RuleParams& rp,
                           BoundKind kind, std::optional<double> s = std::nullopt,
                           std::optional<double> f4_sup = std::nullopt);

}  // namespace hconv

#endif  // HCONV_BOUNDS_HPP
