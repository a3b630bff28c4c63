#include "hconv/bounds.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hconv/closed_form.hpp"
#include "hconv/errors.hpp"

namespace hconv {
namespace {

using detail::nonnegative;

constexpr double kParamTol = 1e-12;

struct NamedKind {
  BoundKind kind;
  std::string_view name;
};

constexpr std::array<NamedKind, 10> kKindNames = {{
    {BoundKind::PowerMeanHConvex, "power-mean"},
    {BoundKind::SConvexPowerMean, "sconvex-power-mean"},
    {BoundKind::HolderHConvex, "holder"},
    {BoundKind::HolderHConcave, "holder-concave"},
    {BoundKind::Iscan13, "iscan13"},
    {BoundKind::Alomari14, "alomari14"},
    {BoundKind::Alomari14a, "alomari14a"},
    {BoundKind::Sarikaya15, "sarikaya15"},
    {BoundKind::Kirmaci16, "kirmaci16"},
    {BoundKind::ClassicalSimpson, "classical-simpson"},
}};

void require_convexity(const TestFunction& tf, Convexity want, std::string_view bound) {
  if (tf.certificate().convexity != want) {
    throw ClassMismatch(std::string(bound) + " requires an " +
                        (want == Convexity::HConvex ? "h-convex" : "h-concave") +
                        " certificate");
  }
}

void require_matching_q(const TestFunction& tf, const RuleParams& rp) {
  if (std::abs(tf.certificate().exponent_q - rp.q) > kParamTol) {
    throw ParamMismatch("certificate exponent q differs from the rule's q");
  }
}

double conjugate_p(const RuleParams& rp, std::string_view bound) {
  if (!rp.p) throw ConjugateMissing(std::string(bound) + " needs the conjugate exponent p");
  if (!(rp.q > 1.0)) throw DomainError(std::string(bound) + " requires q > 1");
  return *rp.p;
}

double dpow(double v, double q) { return std::pow(std::abs(v), q); }

struct KernelPair {
  double left;
  double right;
};

// (gamma, upsilon) pair used by the power-mean bound on each branch.
KernelPair power_mean_pair(const RuleParams& rp, CaseBranch br) {
  const GammaCoeffs g = gamma_coeffs(rp);
  const UpsilonCoeffs u = upsilon_coeffs(rp);
  switch (br) {
    case CaseBranch::MidOrder:
      return {g.gamma2, u.upsilon2};
    case CaseBranch::RightOfUpper:
      return {g.gamma2, u.upsilon1};
    case CaseBranch::LeftOfLower:
      return {g.gamma1, u.upsilon2};
  }
  return {0.0, 0.0};
}

// (eps_left, eps_right) pair used by the Hölder bounds on each branch.
KernelPair holder_pair(const RuleParams& rp, CaseBranch br) {
  const EpsilonCoeffs e = epsilon_coeffs(rp);
  switch (br) {
    case CaseBranch::MidOrder:
      return {e.eps1, e.eps3};
    case CaseBranch::RightOfUpper:
      return {e.eps1, e.eps4};
    case CaseBranch::LeftOfLower:
      return {e.eps2, e.eps3};
  }
  return {0.0, 0.0};
}

// Four weights (left, left reflected, right, right reflected) of a
// mu/eta table, picked by branch.
std::array<double, 4> table_weights(const StarCoeffs& m, CaseBranch br) {
  switch (br) {
    case CaseBranch::MidOrder:
      return {m.mu[0], m.mu[1], m.eta[2], m.eta[3]};
    case CaseBranch::RightOfUpper:
      return {m.mu[0], m.mu[1], m.eta[0], m.eta[1]};
    case CaseBranch::LeftOfLower:
      return {m.mu[2], m.mu[3], m.eta[2], m.eta[3]};
  }
  return {};
}

// Shared tail of every power-mean style bound.
BoundResult assemble_power_mean(const TestFunction& tf, const RuleParams& rp,
                                CaseBranch br, const std::array<double, 4>& w) {
  const KernelPair k = power_mean_pair(rp, br);
  const double coef_left = nonnegative(k.left, "power-mean left coefficient");
  const double coef_right = nonnegative(k.right, "power-mean right coefficient");
  const double fa = dpow(tf.f_prime(tf.a()), rp.q);
  const double fb = dpow(tf.f_prime(tf.b()), rp.q);
  const double A = fb * w[0] + fa * w[1];
  const double B = fb * w[2] + fa * w[3];
  const double e = 1.0 - 1.0 / rp.q;
  const double width = tf.b() - tf.a();
  BoundResult r;
  r.branch = br;
  r.value = width * (pow_or_one(coef_left, e) * std::pow(A, 1.0 / rp.q) +
                     pow_or_one(coef_right, e) * std::pow(B, 1.0 / rp.q));
  r.components = {{"width", width},
                  {"coef_left", coef_left},
                  {"coef_right", coef_right},
                  {"moment_left", w[0]},
                  {"moment_left_reflected", w[1]},
                  {"moment_right", w[2]},
                  {"moment_right_reflected", w[3]},
                  {"fpa_q", fa},
                  {"fpb_q", fb},
                  {"A", A},
                  {"B", B}};
  return r;
}

BoundResult assemble_holder(double width, const RuleParams& rp, CaseBranch br,
                            double prefactor, double left_term, double right_term,
                            std::string_view left_name, std::string_view right_name) {
  const double p = *rp.p;
  const KernelPair e = holder_pair(rp, br);
  const double eps_left = nonnegative(e.left, "eps left");
  const double eps_right = nonnegative(e.right, "eps right");
  const double kernel = std::pow(1.0 / (p + 1.0), 1.0 / p);
  BoundResult r;
  r.branch = br;
  r.value = width * kernel * prefactor *
            (std::pow(eps_left, 1.0 / p) * std::pow(left_term, 1.0 / rp.q) +
             std::pow(eps_right, 1.0 / p) * std::pow(right_term, 1.0 / rp.q));
  r.components = {{"width", width},         {"kernel_factor", kernel},
                  {"prefactor", prefactor}, {"eps_left", eps_left},
                  {"eps_right", eps_right}, {std::string(left_name), left_term},
                  {std::string(right_name), right_term}};
  return r;
}

bool near(double x, double y) { return std::abs(x - y) <= kParamTol; }

void require_rule(const RuleParams& rp, double alpha, double lambda, std::string_view bound) {
  if (!near(rp.alpha, alpha) || !near(rp.lambda, lambda)) {
    throw ParamMismatch(std::string(bound) + " is stated for alpha = " +
                        std::to_string(alpha) + ", lambda = " + std::to_string(lambda));
  }
}

double certificate_s(const TestFunction& tf, std::optional<double> s) {
  if (s) return *s;
  const HModulus& h = tf.certificate().h;
  if (h.kind() == ModulusKind::Power) return h.s_param();
  if (h.kind() == ModulusKind::Identity) return 1.0;
  throw DomainError("bound needs an s-convexity exponent: pass s or use a t^s certificate");
}

BoundResult single_value(double value, const RuleParams& rp, double width) {
  BoundResult r;
  r.value = value;
  r.branch = branch_select(rp);
  r.components = {{"width", width}};
  return r;
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  for (const auto& nk : kKindNames) {
    if (nk.kind == kind) return nk.name;
  }
  return "?";
}

BoundKind parse_bound_kind(std::string_view name) {
  for (const auto& nk : kKindNames) {
    if (nk.name == name) return nk.kind;
  }
  throw DomainError("unknown bound kind '" + std::string(name) + "'");
}

double BoundResult::component(std::string_view name) const {
  for (const auto& [key, value] : components) {
    if (key == name) return value;
  }
  throw DomainError("BoundResult has no component '" + std::string(name) + "'");
}

BoundResult bound_power_mean(const TestFunction& tf, const RuleParams& rp) {
  require_convexity(tf, Convexity::HConvex, "power-mean bound");
  require_matching_q(tf, rp);
  const HModulus& h = tf.certificate().h;
  const std::array<double, 4> w = {weighted_moment(h, rp, Side::Left, false),
                                   weighted_moment(h, rp, Side::Left, true),
                                   weighted_moment(h, rp, Side::Right, false),
                                   weighted_moment(h, rp, Side::Right, true)};
  return assemble_power_mean(tf, rp, branch_select(rp), w);
}

BoundResult bound_sconvex_powermean(const TestFunction& tf, const RuleParams& rp,
                                    double s) {
  require_convexity(tf, Convexity::HConvex, "s-convex power-mean bound");
  require_matching_q(tf, rp);
  const HModulus& h = tf.certificate().h;
  const bool matches = (h.kind() == ModulusKind::Power && near(h.s_param(), s)) ||
                       (h.kind() == ModulusKind::Identity && s == 1.0);
  if (!matches) throw ClassMismatch("certificate modulus is not t^s for the given s");
  const CaseBranch br = branch_select(rp);
  std::array<double, 4> w = table_weights(mu_eta_star(rp, s), br);
  for (double& v : w) v = nonnegative(v, "mu*/eta*");
  return assemble_power_mean(tf, rp, br, w);
}

BoundResult bound_holder_hconvex(const TestFunction& tf, const RuleParams& rp) {
  require_convexity(tf, Convexity::HConvex, "Hölder bound");
  require_matching_q(tf, rp);
  conjugate_p(rp, "Hölder bound");
  const double h_int = h_integral_01(tf.certificate().h);
  const double a = tf.a();
  const double b = tf.b();
  const double node = dpow(tf.f_prime((1.0 - rp.alpha) * b + rp.alpha * a), rp.q);
  const double C = (1.0 - rp.alpha) * (node + dpow(tf.f_prime(a), rp.q));
  const double D = rp.alpha * (node + dpow(tf.f_prime(b), rp.q));
  BoundResult r = assemble_holder(b - a, rp, branch_select(rp),
                                  std::pow(h_int, 1.0 / rp.q), C, D, "C", "D");
  r.components.emplace_back("h_integral", h_int);
  return r;
}

BoundResult bound_holder_hconcave(const TestFunction& tf, const RuleParams& rp) {
  require_convexity(tf, Convexity::HConcave, "concave Hölder bound");
  require_matching_q(tf, rp);
  conjugate_p(rp, "concave Hölder bound");
  const double h_half = h_eval(tf.certificate().h, 0.5);
  if (!(h_half > 0.0)) throw DegenerateModulus("h(1/2) = 0");
  const double a = tf.a();
  const double b = tf.b();
  const double al = rp.alpha;
  const double E = (1.0 - al) * dpow(tf.f_prime(((1.0 - al) * b + (1.0 + al) * a) / 2.0), rp.q);
  const double F = al * dpow(tf.f_prime(((2.0 - al) * b + al * a) / 2.0), rp.q);
  BoundResult r = assemble_holder(b - a, rp, branch_select(rp),
                                  std::pow(1.0 / (2.0 * h_half), 1.0 / rp.q), E, F,
                                  "E", "F");
  r.components.emplace_back("h_half", h_half);
  return r;
}

BoundResult bound_constant_h_corollary(const TestFunction& tf, const RuleParams& rp) {
  require_convexity(tf, Convexity::HConvex, "constant-modulus power-mean bound");
  require_matching_q(tf, rp);
  if (tf.certificate().h.kind() != ModulusKind::Constant) {
    throw ClassMismatch("constant-modulus power-mean bound requires h = 1");
  }
  const CaseBranch br = branch_select(rp);
  const KernelPair k = power_mean_pair(rp, br);
  const double coef = nonnegative(k.left, "gamma") + nonnegative(k.right, "upsilon");
  const double width = tf.b() - tf.a();
  const double ends = dpow(tf.f_prime(tf.b()), rp.q) + dpow(tf.f_prime(tf.a()), rp.q);
  BoundResult r;
  r.branch = br;
  r.value = width * std::pow(ends, 1.0 / rp.q) * coef;
  r.components = {{"width", width}, {"coef_sum", coef}, {"endpoint_sum", ends}};
  return r;
}

BoundResult bound_prior(const TestFunction& tf, const RuleParams& rp, BoundKind kind,
                        std::optional<double> s, std::optional<double> f4_sup) {
  const double width = tf.b() - tf.a();
  require_convexity(tf, Convexity::HConvex, to_string(kind));
  require_matching_q(tf, rp);
  switch (kind) {
    case BoundKind::Iscan13: {
      const CaseBranch br = branch_select(rp);
      std::array<double, 4> w = table_weights(convex_mu_eta(rp), br);
      for (double& v : w) v = nonnegative(v, "mu/eta");
      return assemble_power_mean(tf, rp, br, w);
    }
    case BoundKind::Alomari14:
      require_rule(rp, 0.5, 0.0, "alomari14");
      return single_value(closed_form::alomari14(DerivativeSamples::from(tf),
                                                 certificate_s(tf, s), rp.q),
                          rp, width);
    case BoundKind::Alomari14a:
      require_rule(rp, 0.5, 0.0, "alomari14a");
      return single_value(closed_form::alomari14a(DerivativeSamples::from(tf),
                                                  certificate_s(tf, s), rp.q),
                          rp, width);
    case BoundKind::Sarikaya15:
      require_rule(rp, 0.5, 1.0 / 3.0, "sarikaya15");
      return single_value(closed_form::sarikaya15(DerivativeSamples::from(tf),
                                                  certificate_s(tf, s), rp.q),
                          rp, width);
    case BoundKind::Kirmaci16:
      require_rule(rp, 0.5, 1.0, "kirmaci16");
      return single_value(closed_form::kirmaci16(DerivativeSamples::from(tf),
                                                 certificate_s(tf, s), rp.q),
                          rp, width);
    case BoundKind::ClassicalSimpson:
      require_rule(rp, 0.5, 1.0 / 3.0, "classical-simpson");
      if (!f4_sup) throw DomainError("classical-simpson needs sup |f''''| as input");
      return single_value(closed_form::classical_simpson(width, *f4_sup), rp, width);
    default:
      throw DomainError("bound_prior: '" + std::string(to_string(kind)) +
                        "' is not a literature bound");
  }
}

BoundResult evaluate_bound(const TestFunction& tf, const RuleParams& rp, BoundKind kind,
                           std::optional<double> s, std::optional<double> f4_sup) {
  switch (kind) {
    case BoundKind::PowerMeanHConvex:
      return bound_power_mean(tf, rp);
    case BoundKind::SConvexPowerMean:
      return bound_sconvex_powermean(tf, rp, certificate_s(tf, s));
    case BoundKind::HolderHConvex:
      return bound_holder_hconvex(tf, rp);
    case BoundKind::HolderHConcave:
      return bound_holder_hconcave(tf, rp);
    default:
      return bound_prior(tf, rp, kind, s, f4_sup);
  }
}

}  // namespace hconv
