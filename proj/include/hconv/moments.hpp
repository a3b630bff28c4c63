#ifndef HCONV_MOMENTS_HPP
#define HCONV_MOMENTS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "hconv/classes.hpp"

namespace hconv {

/// Parameters of the generalized rule
///   lambda (alpha f(a) + (1-alpha) f(b)) + (1-lambda) f(alpha a + (1-alpha) b)
/// plus the power q applied to |f'| and, for Hölder bounds, its conjugate p.
/// (1/2, 1/3) is Simpson, (1/2, 0) midpoint and (1/2, 1) trapezoid.
struct RuleParams {
  double alpha = 0.5;
  double lambda = 1.0 / 3.0;
  double q = 1.0;
  std::optional<double> p;

  /// Validates alpha, lambda in [0,1], q >= 1 and, when p is given, p > 1
  /// with 1/p + 1/q = 1 within 1e-14. DomainError otherwise.
  static RuleParams make(double alpha, double lambda, double q,
                         std::optional<double> p = std::nullopt);
  /// make() with p = q / (q - 1); requires q > 1.
  static RuleParams conjugate(double alpha, double lambda, double q);

  /// alpha * lambda, the zero of the left weight |t - alpha lambda|.
  double left_node() const { return alpha * lambda; }
  /// 1 - alpha, where the two halves of the kernel meet.
  double split() const { return 1.0 - alpha; }
  /// 1 - lambda (1 - alpha), the zero of the right weight.
  double right_node() const { return 1.0 - lambda * (1.0 - alpha); }
};

/// Position of 1 - alpha relative to [alpha lambda, 1 - lambda (1 - alpha)].
enum class CaseBranch {
  MidOrder,      // alpha lambda <= 1-alpha <= 1 - lambda(1-alpha)
  RightOfUpper,  // alpha lambda <= 1 - lambda(1-alpha) <= 1-alpha
  LeftOfLower,   // 1-alpha <= alpha lambda <= 1 - lambda(1-alpha)
};

std::string_view to_string(CaseBranch b);

/// Ties go to the first listed branch (MidOrder, then RightOfUpper); the
/// branch formulas coincide there.
CaseBranch branch_select(const RuleParams& rp);

struct GammaCoeffs {
  double gamma1;
  double gamma2;
};

struct UpsilonCoeffs {
  double upsilon1;
  double upsilon2;
};

struct EpsilonCoeffs {
  double eps1;
  double eps2;
  double eps3;
  double eps4;
};

/// mu[0..3] and eta[0..3] hold mu_1..mu_4 and eta_1..eta_4.
struct StarCoeffs {
  std::array<double, 4> mu;
  std::array<double, 4> eta;
};

/// gamma_1 = (1-a)[a l - (1-a)/2], gamma_2 = (a l)^2 - gamma_1.
/// The active one equals the integral of |t - a l| over [0, 1-a].
GammaCoeffs gamma_coeffs(const RuleParams& rp);

/// upsilon_1, upsilon_2; the active one equals the integral of
/// |t - 1 + l(1-a)| over [1-a, 1].
UpsilonCoeffs upsilon_coeffs(const RuleParams& rp);

/// epsilon_1..4 for the p-th power kernel moments. The inactive member of
/// each pair is the odd (sign-preserving) continuation of the active one,
/// so all four stay finite. ConjugateMissing if rp.p is absent.
EpsilonCoeffs epsilon_coeffs(const RuleParams& rp);

/// The weighted kernel moments for h(t) = t^s, s in (0,1]. DomainError
/// outside that range.
StarCoeffs mu_eta_star(const RuleParams& rp, double s);

/// The s = 1 table written with cubic polynomials in alpha and lambda
/// (the convex-case coefficients). Used as an independent route to
/// mu_eta_star(rp, 1).
StarCoeffs convex_mu_eta(const RuleParams& rp);

enum class Side { Left, Right };

/// Left: int_0^{1-a} |t - a l| w(t) dt, Right: int_{1-a}^1 |t - 1 + l(1-a)| w(t) dt,
/// where w(t) = h(t), or h(1-t) when reflected.
///
/// Closed forms for Identity, Power and Constant; otherwise adaptive
/// quadrature (tol 1e-12) split at the kernel zero. NotIntegrable when the
/// moment of a 1/t modulus diverges.
double weighted_moment(const HModulus& h, const RuleParams& rp, Side side,
                       bool reflected);

/// The same moment, always by adaptive quadrature. Exposed so the
/// closed forms can be cross-checked.
double weighted_moment_numeric(const HModulus& h, const RuleParams& rp,
                               Side side, bool reflected, double tol = 1e-12);

/// Unweighted kernel integral on one side: the active gamma or upsilon.
double abs_moment(const RuleParams& rp, Side side);

/// int |kernel|^p over one side, i.e. the active eps_i / (p + 1).
double abs_moment_p(const RuleParams& rp, Side side);

/// x^e with the convention x^0 = 1 (so q = 1 degrades to the linear form).
double pow_or_one(double x, double e);

namespace detail {
/// mu/eta closed forms for any s >= 0 (s = 0 is the constant modulus).
StarCoeffs star_moments(const RuleParams& rp, double s);
/// Clamps cancellation noise below zero; throws std::logic_error when the
/// value is clearly negative.
double nonnegative(double v, std::string_view what);
}  // namespace detail

}  // namespace hconv

#endif  // HCONV_MOMENTS_HPP
