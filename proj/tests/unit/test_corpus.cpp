#include <doctest.h>

#include "hconv/corpus.hpp"
#include "hconv/errors.hpp"

using namespace hconv;
using namespace hconv::corpus;

TEST_CASE("witnesses pass their own certificate") {
  Rng rng(101);
  for (WitnessClass cls : {WitnessClass::Convex, WitnessClass::SConvex, WitnessClass::PFunction,
                           WitnessClass::Concave, WitnessClass::ConcaveSquared}) {
    for (int i = 0; i < 60; ++i) {
      const double q = 1.0 + 2.0 * uniform01(rng);
      const double s = 0.05 + 0.95 * uniform01(rng);
      const TestFunction tf = random_witness(rng, cls, q, s);
      CAPTURE(to_string(cls));
      CHECK(tf.a() < tf.b());
      CHECK(tf.certificate().exponent_q == q);
      CHECK(certify_membership(tf, 3000, 7).holds);
    }
  }
}

TEST_CASE("witness certificates carry the requested modulus") {
  Rng rng(102);
  CHECK(random_witness(rng, WitnessClass::Convex, 2.0).certificate().h.kind() ==
        ModulusKind::Identity);
  CHECK(random_witness(rng, WitnessClass::SConvex, 2.0, 0.4).certificate().h.s_param() == 0.4);
  CHECK(random_witness(rng, WitnessClass::PFunction, 2.0).certificate().h.kind() ==
        ModulusKind::Constant);
  const TestFunction c = random_witness(rng, WitnessClass::Concave, 2.0);
  CHECK(c.certificate().convexity == Convexity::HConcave);
  CHECK(random_witness(rng, WitnessClass::ConcaveSquared, 2.0).certificate().h.label() ==
        "t^2");
}

TEST_CASE("generators are deterministic for a seed") {
  Rng r1(55);
  Rng r2(55);
  for (int i = 0; i < 50; ++i) {
    const SmoothCase a = random_smooth(r1);
    const SmoothCase b = random_smooth(r2);
    CHECK(a.family == b.family);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    const double x = 0.5 * (a.a + a.b);
    CHECK(a.f(x) == b.f(x));
    CHECK(a.f_prime(x) == b.f_prime(x));
  }
  const TestFunction w1 = random_witness(r1, WitnessClass::PFunction, 1.5);
  const TestFunction w2 = random_witness(r2, WitnessClass::PFunction, 1.5);
  CHECK(w1.f(w1.a()) == w2.f(w2.a()));
}

TEST_CASE("Hadamard corpus functions satisfy their chains") {
  Rng rng(103);
  for (HadamardVariant v : {HadamardVariant::Classical, HadamardVariant::SConvex,
                            HadamardVariant::GodunovaLevin, HadamardVariant::PFunction,
                            HadamardVariant::HConvex}) {
    for (int i = 0; i < 100; ++i) {
      const HadamardCase c = random_hadamard(rng, v, 0.3);
      CAPTURE(c.family);
      CHECK(hadamard_check(c.f, c.a, c.b, v, c.h).holds);
    }
  }
}
