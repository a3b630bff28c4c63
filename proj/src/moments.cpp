#include "hconv/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hconv/errors.hpp"

namespace hconv {
namespace {

double signed_pow(double x, double e) { return std::copysign(std::pow(std::abs(x), e), x); }

bool left_is_upper(const RuleParams& rp) { return rp.left_node() <= rp.split(); }
bool right_is_lower(const RuleParams& rp) { return rp.right_node() <= rp.split(); }

// Keeps h evaluations inside the open unit interval when rounding lands a
// node exactly on 0 or 1; those points carry no mass.
double h_interior(const HModulus& h, double t) {
  if (t <= 0.0) t = std::nextafter(0.0, 1.0);
  if (t >= 1.0) t = std::nextafter(1.0, 0.0);
  return h_eval(h, t);
}

// The 1/t modulus is singular at t = 0 (or at t = 1 when reflected); the
// moment converges exactly when the kernel vanishes at that point.
void check_reciprocal(const RuleParams& rp, Side side, bool reflected) {
  const double a = rp.alpha;
  bool diverges = false;
  if (side == Side::Left) {
    diverges = reflected ? (a == 0.0) : (rp.left_node() > 0.0 && a < 1.0);
  } else {
    diverges = reflected ? (rp.lambda * (1.0 - a) > 0.0 && a > 0.0) : (a == 1.0);
  }
  if (diverges) {
    throw NotIntegrable(std::string("weighted moment with h(t) = 1/t diverges (") +
                        (side == Side::Left ? "left" : "right") +
                        (reflected ? ", reflected)" : ")"));
  }
}

}  // namespace

RuleParams RuleParams::make(double alpha, double lambda, double q,
                            std::optional<double> p) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("RuleParams: alpha must lie in [0,1]");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("RuleParams: lambda must lie in [0,1]");
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("RuleParams: q must be >= 1");
  if (p) {
    if (!(*p > 1.0)) throw DomainError("RuleParams: p must be > 1");
    if (std::abs(1.0 / *p + 1.0 / q - 1.0) > 1e-14) {
      throw DomainError("RuleParams: p and q are not conjugate");
    }
  }
  RuleParams rp{alpha, lambda, q, p};
  // alpha lambda + lambda (1 - alpha) = lambda <= 1.
  if (rp.left_node() > rp.right_node() + 1e-15) {
    throw std::logic_error("RuleParams: alpha lambda exceeds 1 - lambda (1 - alpha)");
  }
  return rp;
}

RuleParams RuleParams::conjugate(double alpha, double lambda, double q) {
  if (!(q > 1.0)) throw DomainError("RuleParams::conjugate: q must be > 1");
  return make(alpha, lambda, q, q / (q - 1.0));
}

std::string_view to_string(CaseBranch b) {
  switch (b) {
    case CaseBranch::MidOrder:
      return "mid";
    case CaseBranch::RightOfUpper:
      return "right";
    case CaseBranch::LeftOfLower:
      return "left";
  }
  return "?";
}

CaseBranch branch_select(const RuleParams& rp) {
  const double lo = rp.left_node();
  const double mid = rp.split();
  const double hi = rp.right_node();
  if (lo <= mid && mid <= hi) return CaseBranch::MidOrder;
  if (mid >= hi) return CaseBranch::RightOfUpper;
  return CaseBranch::LeftOfLower;
}

GammaCoeffs gamma_coeffs(const RuleParams& rp) {
  const double al = rp.left_node();
  const double om = rp.split();
  const double g1 = om * (al - om / 2.0);
  return {g1, al * al - g1};
}

UpsilonCoeffs upsilon_coeffs(const RuleParams& rp) {
  const double a = rp.alpha;
  const double om = rp.split();
  const double c = rp.right_node();
  return {(1.0 - om * om) / 2.0 - a * c,
          (1.0 + om * om) / 2.0 - (rp.lambda + 1.0) * om * c};
}

EpsilonCoeffs epsilon_coeffs(const RuleParams& rp) {
  if (!rp.p) throw ConjugateMissing("epsilon_coeffs: conjugate exponent p is absent");
  const double e = *rp.p + 1.0;
  const double al = rp.left_node();
  const double om = rp.split();
  const double l1 = rp.lambda * om;
  const double a = rp.alpha;
  return {std::pow(al, e) + signed_pow(om - al, e),
          std::pow(al, e) - signed_pow(al - 1.0 + a, e),
          std::pow(l1, e) + signed_pow(a - l1, e),
          std::pow(l1, e) - signed_pow(l1 - a, e)};
}

namespace detail {

StarCoeffs star_moments(const RuleParams& rp, double s) {
  const double a = rp.alpha;
  const double al = rp.left_node();
  const double om = rp.split();
  const double c = rp.right_node();
  const double l1 = rp.lambda * om;
  const double s1 = s + 1.0;
  const double s2 = s + 2.0;
  const double k = 2.0 / (s1 * s2);
  auto pw = [](double x, double e) { return std::pow(x, e); };

  StarCoeffs out{};
  out.mu[0] = pw(al, s2) * k - al * pw(om, s1) / s1 + pw(om, s2) / s2;
  out.mu[1] = pw(1.0 - al, s2) * k - (1.0 - al) * (1.0 + pw(a, s1)) / s1 +
              (1.0 + pw(a, s2)) / s2;
  out.mu[2] = al * pw(om, s1) / s1 - pw(om, s2) / s2;
  out.mu[3] = (al - 1.0) * (1.0 - pw(a, s1)) / s1 + (1.0 - pw(a, s2)) / s2;
  out.eta[0] = (1.0 - pw(om, s2)) / s2 - c / s1 * (1.0 - pw(om, s1));
  out.eta[1] = l1 * pw(a, s1) / s1 - pw(a, s2) / s2;
  out.eta[2] = k * pw(c, s2) - (1.0 + pw(om, s1)) * c / s1 + (1.0 + pw(om, s2)) / s2;
  out.eta[3] = pw(l1, s2) * k - l1 * pw(a, s1) / s1 + pw(a, s2) / s2;
  return out;
}

double nonnegative(double v, std::string_view what) {
  if (v >= 0.0) return v;
  if (v > -1e-12) return 0.0;
  throw std::logic_error(std::string(what) + " is negative: " + std::to_string(v));
}

}  // namespace detail

StarCoeffs mu_eta_star(const RuleParams& rp, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("mu_eta_star: s must lie in (0, 1]");
  return detail::star_moments(rp, s);
}

StarCoeffs convex_mu_eta(const RuleParams& rp) {
  const double a = rp.alpha;
  const double al = rp.left_node();
  const double om = rp.split();
  const double c = rp.right_node();
  const double l1 = rp.lambda * om;
  StarCoeffs out{};
  out.mu[0] = (al * al * al + om * om * om) / 3.0 - al * om * om / 2.0;
  out.mu[1] = (1.0 + a * a * a + (1.0 - al) * (1.0 - al) * (1.0 - al)) / 3.0 -
              (1.0 - al) / 2.0 * (1.0 + a * a);
  out.mu[2] = al * om * om / 2.0 - om * om * om / 3.0;
  out.mu[3] = (al - 1.0) * (1.0 - a * a) / 2.0 + (1.0 - a * a * a) / 3.0;
  out.eta[0] = (1.0 - om * om * om) / 3.0 - c / 2.0 * a * (2.0 - a);
  out.eta[1] = l1 * a * a / 2.0 - a * a * a / 3.0;
  out.eta[2] = c * c * c / 3.0 - c / 2.0 * (1.0 + om * om) + (1.0 + om * om * om) / 3.0;
  out.eta[3] = l1 * l1 * l1 / 3.0 - l1 * a * a / 2.0 + a * a * a / 3.0;
  return out;
}

double abs_moment(const RuleParams& rp, Side side) {
  if (side == Side::Left) {
    const GammaCoeffs g = gamma_coeffs(rp);
    return detail::nonnegative(left_is_upper(rp) ? g.gamma2 : g.gamma1, "gamma");
  }
  const UpsilonCoeffs u = upsilon_coeffs(rp);
  return detail::nonnegative(right_is_lower(rp) ? u.upsilon1 : u.upsilon2, "upsilon");
}

double abs_moment_p(const RuleParams& rp, Side side) {
  const EpsilonCoeffs e = epsilon_coeffs(rp);
  const double p1 = *rp.p + 1.0;
  if (side == Side::Left) {
    return detail::nonnegative((left_is_upper(rp) ? e.eps1 : e.eps2) / p1, "eps");
  }
  return detail::nonnegative((right_is_lower(rp) ? e.eps4 : e.eps3) / p1, "eps");
}

double weighted_moment_numeric(const HModulus& h, const RuleParams& rp, Side side,
                               bool reflected, double tol) {
  if (h.kind() == ModulusKind::Reciprocal) check_reciprocal(rp, side, reflected);
  const double lo = side == Side::Left ? 0.0 : rp.split();
  const double hi = side == Side::Left ? rp.split() : 1.0;
  const double zero = side == Side::Left ? rp.left_node() : rp.right_node();
  if (!(hi > lo)) return 0.0;
  const RealFn integrand = [&](double t) {
    const double w = reflected ? h_interior(h, 1.0 - t) : h_interior(h, t);
    return std::abs(t - zero) * w;
  };
  const double cut[] = {zero};
  return integrate_split(integrand, lo, hi, cut, Tolerance{tol, 0.0}).value;
}

double weighted_moment(const HModulus& h, const RuleParams& rp, Side side,
                       bool reflected) {
  double s = 0.0;
  switch (h.kind()) {
    case ModulusKind::Constant:
      return abs_moment(rp, side);
    case ModulusKind::Identity:
      s = 1.0;
      break;
    case ModulusKind::Power:
      s = h.s_param();
      break;
    case ModulusKind::Reciprocal:
    case ModulusKind::Custom:
      return weighted_moment_numeric(h, rp, side, reflected);
  }
  if (side == Side::Left && rp.split() <= 0.0) return 0.0;
  if (side == Side::Right && rp.alpha <= 0.0) return 0.0;
  const StarCoeffs m = detail::star_moments(rp, s);
  double v = 0.0;
  if (side == Side::Left) {
    const bool upper = left_is_upper(rp);
    v = reflected ? (upper ? m.mu[1] : m.mu[3]) : (upper ? m.mu[0] : m.mu[2]);
  } else {
    const bool lower = right_is_lower(rp);
    v = reflected ? (lower ? m.eta[1] : m.eta[3]) : (lower ? m.eta[0] : m.eta[2]);
  }
  return detail::nonnegative(v, "weighted moment");
}

double pow_or_one(double x, double e) {
  if (e == 0.0) return 1.0;
  return std::pow(x, e);
}

}  // namespace hconv
