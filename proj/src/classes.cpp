#include "hconv/classes.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

#include "hconv/errors.hpp"
#include "hconv/random.hpp"

namespace hconv {
namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

constexpr double kMembershipTol = 1e-12;

}  // namespace

HModulus::HModulus(ModulusKind kind, double s, bool integrable, RealFn fn,
                   std::string label)
    : kind_(kind), s_(s), integrable_(integrable), fn_(std::move(fn)),
      label_(std::move(label)) {}

HModulus HModulus::identity() {
  return {ModulusKind::Identity, 1.0, true, nullptr, "t"};
}

HModulus HModulus::power(double s) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw DomainError("HModulus::power: s must lie in (0, 1], got " + shortest(s));
  }
  return {ModulusKind::Power, s, true, nullptr, "t^" + shortest(s)};
}

HModulus HModulus::constant() {
  return {ModulusKind::Constant, 0.0, true, nullptr, "1"};
}

HModulus HModulus::reciprocal() {
  return {ModulusKind::Reciprocal, -1.0, false, nullptr, "1/t"};
}

HModulus HModulus::custom(RealFn h, bool integrable_on_unit, std::string label) {
  if (!h) throw DomainError("HModulus::custom: empty evaluable");
  bool nonzero = false;
  for (int i = 1; i < 64; ++i) {
    const double t = i / 64.0;
    const double v = h(t);
    if (!std::isfinite(v) || v < 0.0) {
      throw EvaluationError("HModulus::custom: h(" + shortest(t) +
                            ") = " + shortest(v) + " is not a non-negative real");
    }
    nonzero = nonzero || v > 0.0;
  }
  if (!nonzero) throw EvaluationError("HModulus::custom: h is identically zero");
  return {ModulusKind::Custom, 0.0, integrable_on_unit, std::move(h),
          std::move(label)};
}

double HModulus::s_param() const {
  if (kind_ != ModulusKind::Power) {
    throw DomainError("s_param is only defined for a power modulus");
  }
  return s_;
}

std::string HModulus::label() const { return label_; }

double h_eval(const HModulus& h, double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("h_eval: t must lie in (0,1), got " + shortest(t));
  }
  switch (h.kind_) {
    case ModulusKind::Identity:
      return t;
    case ModulusKind::Power:
      return std::pow(t, h.s_);
    case ModulusKind::Constant:
      return 1.0;
    case ModulusKind::Reciprocal:
      return 1.0 / t;
    case ModulusKind::Custom: {
      const double v = h.fn_(t);
      if (!std::isfinite(v) || v < 0.0) {
        throw EvaluationError("h_eval: custom modulus returned " + shortest(v) +
                              " at t = " + shortest(t));
      }
      return v;
    }
  }
  return 0.0;
}

double h_integral_01(const HModulus& h) {
  switch (h.kind()) {
    case ModulusKind::Identity:
      return 0.5;
    case ModulusKind::Power:
      return 1.0 / (h.s_param() + 1.0);
    case ModulusKind::Constant:
      return 1.0;
    case ModulusKind::Reciprocal:
      throw NotIntegrable("h(t) = 1/t is not integrable on [0,1]");
    case ModulusKind::Custom:
      break;
  }
  if (!h.integrable_on_unit()) {
    throw NotIntegrable("custom modulus '" + h.label() +
                        "' is declared non-integrable on [0,1]");
  }
  return integrate_adaptive([&h](double t) { return h_eval(h, t); }, 0.0, 1.0,
                            1e-12)
      .value;
}

ClassCertificate ClassCertificate::make(Convexity convexity, HModulus h, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw DomainError("ClassCertificate: exponent q must be >= 1, got " + shortest(q));
  }
  return ClassCertificate{convexity, std::move(h), q};
}

TestFunction::TestFunction(RealFn f, RealFn fp, double a, double b,
                           ClassCertificate cert)
    : f_(std::move(f)), fp_(std::move(fp)), a_(a), b_(b), cert_(std::move(cert)) {}

TestFunction TestFunction::create(RealFn f, RealFn f_prime, double a, double b,
                                  ClassCertificate certificate) {
  if (!f || !f_prime) throw DomainError("TestFunction: empty evaluable");
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("TestFunction: interval must satisfy a < b");
  }
  const double width = b - a;
  const double step = 6e-6 * width;
  std::array<double, 11> fd{};
  std::array<double, 11> exact{};
  double scale = 1.0;
  for (std::size_t i = 0; i < 11; ++i) {
    const double x = a + static_cast<double>(i + 1) * width / 12.0;
    fd[i] = (f(x + step) - f(x - step)) / (2.0 * step);
    exact[i] = f_prime(x);
    scale = std::max(scale, std::abs(exact[i]));
  }
  for (std::size_t i = 0; i < 11; ++i) {
    if (!(std::abs(fd[i] - exact[i]) <= 1e-6 * scale)) {
      const double x = a + static_cast<double>(i + 1) * width / 12.0;
      throw DomainError("TestFunction: f_prime disagrees with a central difference of f at x = " +
                        shortest(x) + " (" + shortest(exact[i]) + " vs " +
                        shortest(fd[i]) + ")");
    }
  }
  return TestFunction(std::move(f), std::move(f_prime), a, b, std::move(certificate));
}

TestFunction TestFunction::with_certificate(ClassCertificate certificate) const {
  return TestFunction(f_, fp_, a_, b_, std::move(certificate));
}

MembershipReport certify_function(const RealFn& g, double a, double b,
                                  Convexity convexity, const HModulus& h,
                                  std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw DomainError("certify_function: n_samples must be >= 1");
  Rng rng(seed);
  MembershipReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  SampleTriple worst{a, b, 0.5};
  const double sign = convexity == Convexity::HConvex ? 1.0 : -1.0;

  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = uniform(rng, a, b);
    const double y = uniform(rng, a, b);
    const double alpha = uniform_open01(rng);
    const double gx = g(x);
    const double gy = g(y);
    const double gm = g(alpha * x + (1.0 - alpha) * y);
    if (!std::isfinite(gx) || !std::isfinite(gy) || !std::isfinite(gm)) {
      throw NonFiniteSample("certify_function: g is not finite near x = " + shortest(x) +
                            ", y = " + shortest(y));
    }
    const double combo = h_eval(h, alpha) * gx + h_eval(h, 1.0 - alpha) * gy;
    const double violation = sign * (gm - combo);
    report.scale = std::max({report.scale, std::abs(gx), std::abs(gy), std::abs(gm)});
    if (violation > report.worst_violation) {
      report.worst_violation = violation;
      worst = {x, y, alpha};
    }
  }
  report.holds = report.worst_violation <= kMembershipTol * (1.0 + report.scale);
  if (!report.holds) report.witness = worst;
  return report;
}

MembershipReport certify_membership(const TestFunction& tf, std::size_t n_samples,
                                    std::uint64_t seed) {
  const ClassCertificate& cert = tf.certificate();
  const double q = cert.exponent_q;
  const RealFn g = [&tf, q](double x) { return std::pow(std::abs(tf.f_prime(x)), q); };
  return certify_function(g, tf.a(), tf.b(), cert.convexity, cert.h, n_samples, seed);
}

}  // namespace hconv
