#include <doctest.h>

#include <cmath>

#include "hconv/classes.hpp"
#include "hconv/errors.hpp"
#include "hconv/quadrature.hpp"
#include "support.hpp"

using namespace hconv;

TEST_CASE("h_eval on the named moduli") {
  CHECK(h_eval(HModulus::identity(), 0.25) == 0.25);
  CHECK(h_eval(HModulus::power(0.5), 0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h_eval(HModulus::reciprocal(), 0.5) == 2.0);
  CHECK(h_eval(HModulus::constant(), 0.7) == 1.0);
}

TEST_CASE("h_eval rejects points outside the open unit interval") {
  for (double t : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    CHECK_THROWS_AS(h_eval(HModulus::identity(), t), DomainError);
  }
}

TEST_CASE("custom moduli are spot-checked and evaluated defensively") {
  CHECK_THROWS_AS(HModulus::custom([](double t) { return t - 0.5; }, true, "bad"),
                  EvaluationError);
  CHECK_THROWS_AS(HModulus::custom([](double) { return 0.0; }, true, "zero"), EvaluationError);
  CHECK_THROWS_AS(HModulus::custom(nullptr, true, "empty"), DomainError);

  // negative only between spot-check points
  const HModulus sneaky =
      HModulus::custom([](double t) { return (t > 0.99 && t < 0.995) ? -1.0 : t; }, true, "x");
  CHECK(h_eval(sneaky, 0.5) == 0.5);
  CHECK_THROWS_AS(h_eval(sneaky, 0.992), EvaluationError);

  const HModulus sq = HModulus::custom([](double t) { return t * t; }, true, "t^2");
  CHECK(sq.kind() == ModulusKind::Custom);
  CHECK(sq.label() == "t^2");
  CHECK(h_integral_01(sq) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  const HModulus undeclared = HModulus::custom([](double t) { return t; }, false, "t?");
  CHECK_THROWS_AS(h_integral_01(undeclared), NotIntegrable);
}

TEST_CASE("power modulus parameter") {
  CHECK(HModulus::power(0.5).s_param() == 0.5);
  CHECK(HModulus::power(1.0).s_param() == 1.0);
  CHECK_THROWS_AS(HModulus::power(0.0), DomainError);
  CHECK_THROWS_AS(HModulus::power(1.5), DomainError);
  CHECK_THROWS_AS(HModulus::identity().s_param(), DomainError);
  CHECK(HModulus::power(0.5).label() == "t^0.5");
}

TEST_CASE("h_integral_01 closed forms") {
  CHECK(h_integral_01(HModulus::identity()) == 0.5);
  CHECK(h_integral_01(HModulus::power(0.5)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(h_integral_01(HModulus::constant()) == 1.0);
  CHECK_THROWS_AS(h_integral_01(HModulus::reciprocal()), NotIntegrable);
  CHECK(HModulus::identity().integrable_on_unit());
  CHECK_FALSE(HModulus::reciprocal().integrable_on_unit());
}

TEST_CASE("h_integral_01 agrees with quadrature of h_eval") {
  for (const HModulus& h : {HModulus::identity(), HModulus::constant(), HModulus::power(0.1),
                            HModulus::power(0.37), HModulus::power(0.9)}) {
    const double numeric =
        integrate_adaptive([&h](double t) { return h_eval(h, t); }, 0.0, 1.0, 1e-13).value;
    CHECK(std::abs(numeric - h_integral_01(h)) <= 1e-12);
  }
}

TEST_CASE("certificates and test functions validate their inputs") {
  CHECK_THROWS_AS(ClassCertificate::make(Convexity::HConvex, HModulus::identity(), 0.5),
                  DomainError);
  CHECK_THROWS_AS(testing::square(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(testing::square(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(testing::make_tf([](double x) { return x * x; }, [](double x) { return x; },
                                   0.0, 1.0, HModulus::identity()),
                  DomainError);
  const TestFunction tf = testing::square(0.0, 2.0);
  CHECK(tf.f(1.5) == 2.25);
  CHECK(tf.f_prime(1.5) == 3.0);
  const TestFunction re = tf.with_certificate(
      ClassCertificate::make(Convexity::HConcave, HModulus::constant(), 2.0));
  CHECK(re.certificate().convexity == Convexity::HConcave);
  CHECK(re.certificate().exponent_q == 2.0);
  CHECK(re.b() == 2.0);
}

TEST_CASE("certify_membership examples") {
  CHECK(certify_membership(testing::square()).holds);

  const TestFunction root = testing::make_tf([](double x) { return std::pow(x, 1.5); },
                                             [](double x) { return 1.5 * std::sqrt(x); }, 0.0,
                                             1.0, HModulus::power(0.5));
  CHECK(certify_membership(root).holds);

  const TestFunction wrong = testing::make_tf([](double x) { return x * x * x / 3.0; },
                                              [](double x) { return x * x; }, 0.0, 1.0,
                                              HModulus::identity(), 1.0, Convexity::HConcave);
  const MembershipReport r = certify_membership(wrong);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.worst_violation > 0.0);
  const SampleTriple w = *r.witness;
  CHECK(w.alpha > 0.0);
  CHECK(w.alpha < 1.0);
  // the witness reproduces the reported violation
  const auto g = [](double x) { return x * x; };
  const double gap = w.alpha * g(w.x) + (1.0 - w.alpha) * g(w.y) -
                     g(w.alpha * w.x + (1.0 - w.alpha) * w.y);
  CHECK(gap == doctest::Approx(r.worst_violation));
}

TEST_CASE("concave root is rejected as convex") {
  const TestFunction root = testing::make_tf([](double x) { return std::pow(x, 1.5); },
                                             [](double x) { return 1.5 * std::sqrt(x); }, 0.0,
                                             1.0, HModulus::identity());
  CHECK_FALSE(certify_membership(root).holds);
}

TEST_CASE("membership sampling is seeded") {
  const TestFunction tf = testing::exponential(-1.0, 2.0);
  const MembershipReport a = certify_membership(tf, 500, 42);
  const MembershipReport b = certify_membership(tf, 500, 42);
  const MembershipReport c = certify_membership(tf, 500, 43);
  CHECK(a.worst_violation == b.worst_violation);
  CHECK(a.worst_violation != c.worst_violation);
  CHECK_THROWS_AS(certify_membership(tf, 0), DomainError);
}

TEST_CASE("nonnegative convex functions pass the t check") {
  const RealFn fns[] = {[](double x) { return x * x; },
                        [](double x) { return std::exp(-x); },
                        [](double x) { return std::abs(x - 0.2); },
                        [](double x) { return std::pow(x + 1.0, 3.0); }};
  for (const RealFn& g : fns) {
    CHECK(certify_function(g, 0.0, 1.0, Convexity::HConvex, HModulus::identity(), 2000).holds);
  }
}

TEST_CASE("constant modulus check is the P-function inequality") {
  // quasi-convex, not convex
  const RealFn vee = [](double x) { return std::sqrt(std::abs(x - 0.4)); };
  CHECK(certify_function(vee, 0.0, 1.0, Convexity::HConvex, HModulus::constant(), 5000).holds);
  CHECK_FALSE(
      certify_function(vee, 0.0, 1.0, Convexity::HConvex, HModulus::identity(), 5000).holds);
  // a bump breaks g(m) <= g(x) + g(y)
  const RealFn bump = [](double x) { return std::exp(-50.0 * (x - 0.5) * (x - 0.5)); };
  CHECK_FALSE(
      certify_function(bump, 0.0, 1.0, Convexity::HConvex, HModulus::constant(), 5000).holds);
}

TEST_CASE("non-finite g is reported rather than ignored") {
  const RealFn g = [](double x) { return std::log(x - 0.5); };
  CHECK_THROWS_AS(
      certify_function(g, 0.0, 1.0, Convexity::HConvex, HModulus::identity(), 100),
      NonFiniteSample);
}
