#include "hconv/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hconv/errors.hpp"

namespace hconv {

double rule_value(const RealFn& f, double a, double b, const RuleParams& rp) {
  const double al = rp.alpha;
  const double la = rp.lambda;
  return la * (al * f(a) + (1.0 - al) * f(b)) + (1.0 - la) * f(al * a + (1.0 - al) * b);
}

double mean_value(const RealFn& f, double a, double b) {
  return integrate_adaptive(f, a, b, kOracleTolerance).value / (b - a);
}

double lhs_error(const TestFunction& tf, const RuleParams& rp) {
  return std::abs(rule_value(tf.f_fn(), tf.a(), tf.b(), rp) -
                  mean_value(tf.f_fn(), tf.a(), tf.b()));
}

IdentitySides lemma_identity_sides(const RealFn& f, const RealFn& f_prime, double a,
                                   double b, const RuleParams& rp) {
  const double lhs = rule_value(f, a, b, rp) - mean_value(f, a, b);
  const double left_zero = rp.left_node();
  const double right_zero = rp.right_node();
  const double split = rp.split();
  const RealFn left = [&](double t) { return (t - left_zero) * f_prime(t * b + (1.0 - t) * a); };
  const RealFn right = [&](double t) {
    return (t - right_zero) * f_prime(t * b + (1.0 - t) * a);
  };
  const double rhs = (b - a) * (integrate_adaptive(left, 0.0, split, kOracleTolerance).value +
                                integrate_adaptive(right, split, 1.0, kOracleTolerance).value);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

double lemma_identity_residual(const TestFunction& tf, const RuleParams& rp) {
  return lemma_identity_sides(tf.f_fn(), tf.f_prime_fn(), tf.a(), tf.b(), rp).residual;
}

namespace {

struct NamedVariant {
  HadamardVariant variant;
  std::string_view name;
};

constexpr std::array<NamedVariant, 5> kVariantNames = {{
    {HadamardVariant::Classical, "classical"},
    {HadamardVariant::SConvex, "s-convex"},
    {HadamardVariant::GodunovaLevin, "godunova-levin"},
    {HadamardVariant::PFunction, "p-function"},
    {HadamardVariant::HConvex, "h-convex"},
}};

void require_kind(const HModulus& h, ModulusKind want, HadamardVariant v) {
  if (h.kind() != want) {
    throw ClassMismatch("hadamard_check: variant '" + std::string(to_string(v)) +
                        "' does not match modulus " + h.label());
  }
}

}  // namespace

std::string_view to_string(HadamardVariant v) {
  for (const auto& nv : kVariantNames) {
    if (nv.variant == v) return nv.name;
  }
  return "?";
}

HadamardVariant parse_hadamard_variant(std::string_view name) {
  for (const auto& nv : kVariantNames) {
    if (nv.name == name) return nv.variant;
  }
  throw DomainError("unknown Hadamard variant '" + std::string(name) + "'");
}

HadamardReport hadamard_check(const RealFn& f, double a, double b, HadamardVariant variant,
                              const HModulus& h) {
  if (!(a < b)) throw DomainError("hadamard_check: requires a < b");
  const double fm = f((a + b) / 2.0);
  const double ends = f(a) + f(b);
  const double mean = mean_value(f, a, b);

  HadamardReport r;
  switch (variant) {
    case HadamardVariant::Classical:
      require_kind(h, ModulusKind::Identity, variant);
      r = {fm, mean, ends / 2.0, false};
      break;
    case HadamardVariant::SConvex: {
      require_kind(h, ModulusKind::Power, variant);
      const double s = h.s_param();
      r = {std::pow(2.0, s - 1.0) * fm, mean, ends / (s + 1.0), false};
      break;
    }
    case HadamardVariant::GodunovaLevin:
      require_kind(h, ModulusKind::Reciprocal, variant);
      r = {fm, 4.0 * mean, std::nullopt, false};
      break;
    case HadamardVariant::PFunction:
      require_kind(h, ModulusKind::Constant, variant);
      r = {fm, 2.0 * mean, 2.0 * ends, false};
      break;
    case HadamardVariant::HConvex: {
      const double h_half = h_eval(h, 0.5);
      if (!(h_half > 0.0)) throw DegenerateModulus("hadamard_check: h(1/2) = 0");
      std::optional<double> right;
      if (h.integrable_on_unit()) right = ends * h_integral_01(h);
      r = {fm / (2.0 * h_half), mean, right, false};
      break;
    }
  }
  const double slack = 1e-10 * (1.0 + std::abs(r.middle));
  r.holds = r.left <= r.middle + slack && (!r.right || r.middle <= *r.right + slack);
  return r;
}

HadamardReport hadamard_check(const TestFunction& tf, HadamardVariant variant) {
  if (tf.certificate().convexity != Convexity::HConvex) {
    throw ClassMismatch("hadamard_check: needs an h-convex certificate");
  }
  return hadamard_check(tf.f_fn(), tf.a(), tf.b(), variant, tf.certificate().h);
}

}  // namespace hconv
