#ifndef HCONV_CLASSES_HPP
#define HCONV_CLASSES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "hconv/quadrature.hpp"

namespace hconv {

enum class ModulusKind { Identity, Power, Constant, Reciprocal, Custom };

/// The modulus h of an h-convex class, defined on (0,1).
///
/// The four named kinds give the classical families: h(t) = t (convex),
/// t^s (s-convex in the second sense), 1 (P-functions) and 1/t
/// (Godunova-Levin). A custom modulus wraps any non-negative evaluable; its
/// integrability on [0,1] is declared by the caller.
class HModulus {
 public:
  static HModulus identity();
  /// s in (0, 1].
  static HModulus power(double s);
  static HModulus constant();
  static HModulus reciprocal();
  /// Spot-checks non-negativity and that h is not identically zero on a
  /// fixed grid of (0,1); throws EvaluationError otherwise.
  static HModulus custom(RealFn h, bool integrable_on_unit,
                         std::string label = "custom");

  ModulusKind kind() const { return kind_; }
  /// Exponent of a Power modulus; DomainError for other kinds.
  double s_param() const;
  bool integrable_on_unit() const { return integrable_; }
  /// Short text form: "t", "t^0.5", "1", "1/t" or the custom label.
  std::string label() const;

 private:
  HModulus(ModulusKind kind, double s, bool integrable, RealFn fn,
           std::string label);

  ModulusKind kind_;
  double s_;
  bool integrable_;
  RealFn fn_;
  std::string label_;

  friend double h_eval(const HModulus& h, double t);
};

/// h(t) for t in (0,1). DomainError outside (0,1); EvaluationError if a
/// custom modulus yields a negative or non-finite value.
double h_eval(const HModulus& h, double t);

/// Integral of h over [0,1]: 1/2, 1/(s+1), 1 in closed form, adaptive
/// quadrature (tol 1e-12) for custom moduli. NotIntegrable for 1/t and for
/// custom moduli declared non-integrable.
double h_integral_01(const HModulus& h);

enum class Convexity { HConvex, HConcave };

/// Declares that |f'|^q lies in SX(h) (HConvex) or SV(h) (HConcave).
struct ClassCertificate {
  Convexity convexity;
  HModulus h;
  double exponent_q;

  /// DomainError unless q >= 1.
  static ClassCertificate make(Convexity convexity, HModulus h, double q);
};

/// A differentiable function on [a, b] together with the class claimed for
/// |f'|^q.
class TestFunction {
 public:
  /// Validates a < b and that f_prime matches a central difference of f to
  /// 1e-6 (relative to the derivative scale) at 11 interior points.
  static TestFunction create(RealFn f, RealFn f_prime, double a, double b,
                             ClassCertificate certificate);

  double f(double x) const { return f_(x); }
  double f_prime(double x) const { return fp_(x); }
  double a() const { return a_; }
  double b() const { return b_; }
  const ClassCertificate& certificate() const { return cert_; }
  const RealFn& f_fn() const { return f_; }
  const RealFn& f_prime_fn() const { return fp_; }

  /// Same f on the same interval under a different certificate.
  TestFunction with_certificate(ClassCertificate certificate) const;

 private:
  TestFunction(RealFn f, RealFn fp, double a, double b, ClassCertificate cert);

  RealFn f_;
  RealFn fp_;
  double a_;
  double b_;
  ClassCertificate cert_;
};

struct SampleTriple {
  double x;
  double y;
  double alpha;
};

struct MembershipReport {
  bool holds = true;
  /// max over samples of g(ax+(1-a)y) - h(a)g(x) - h(1-a)g(y); sign flipped
  /// for HConcave. Non-positive when every sample satisfies the inequality.
  double worst_violation = 0.0;
  /// The triple attaining worst_violation, set only when the check fails.
  std::optional<SampleTriple> witness;
  double scale = 0.0;  // max sampled |g|
};

inline constexpr std::size_t kDefaultMembershipSamples = 10'000;
inline constexpr std::uint64_t kDefaultMembershipSeed = 0x5eed'c0de'2012ULL;

/// Sampled check of the defining inequality for an arbitrary g on [a, b].
/// alpha is drawn from the open interval (0,1). Holds iff the worst
/// violation is at most 1e-12 * (1 + scale).
MembershipReport certify_function(const RealFn& g, double a, double b,
                                  Convexity convexity, const HModulus& h,
                                  std::size_t n_samples,
                                  std::uint64_t seed = kDefaultMembershipSeed);

/// certify_function applied to g = |f'|^q with the certificate of tf.
MembershipReport certify_membership(const TestFunction& tf,
                                    std::size_t n_samples = kDefaultMembershipSamples,
                                    std::uint64_t seed = kDefaultMembershipSeed);

}  // namespace hconv

#endif  // HCONV_CLASSES_HPP
