#include "hconv/corpus.hpp"

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "hconv/errors.hpp"

namespace hconv::corpus {
namespace {

// Draws are made one statement at a time so the sequence does not depend on
// argument evaluation order.

std::size_t pick(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

double signed_magnitude(Rng& rng, double lo, double hi) {
  const double m = uniform(rng, lo, hi);
  return uniform01(rng) < 0.5 ? -m : m;
}

struct Interval {
  double a;
  double b;
};

Interval draw_interval(Rng& rng, double lo, double hi, double wmin, double wmax) {
  const double a = uniform(rng, lo, hi);
  const double w = uniform(rng, wmin, wmax);
  return {a, a + w};
}

// Coefficients low to high.
std::pair<RealFn, RealFn> polynomial(std::vector<double> c) {
  auto coef = std::make_shared<const std::vector<double>>(std::move(c));
  RealFn f = [coef](double x) {
    double acc = 0.0;
    for (auto it = coef->rbegin(); it != coef->rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  RealFn fp = [coef](double x) {
    double acc = 0.0;
    for (std::size_t k = coef->size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * (*coef)[k];
    return acc;
  };
  return {std::move(f), std::move(fp)};
}

std::pair<RealFn, RealFn> exponential(double c, double k) {
  return {[c, k](double x) { return c * std::exp(k * x); },
          [c, k](double x) { return c * k * std::exp(k * x); }};
}

// f' = c (x - x0)^e on x >= x0.
std::pair<RealFn, RealFn> rising_power(double c, double x0, double e) {
  return {[c, x0, e](double x) { return c * std::pow(x - x0, e + 1.0) / (e + 1.0); },
          [c, x0, e](double x) { return c * std::pow(x - x0, e); }};
}

// f' = c (x1 - x)^e on x <= x1.
std::pair<RealFn, RealFn> falling_power(double c, double x1, double e) {
  return {[c, x1, e](double x) { return -c * std::pow(x1 - x, e + 1.0) / (e + 1.0); },
          [c, x1, e](double x) { return c * std::pow(x1 - x, e); }};
}

// f' = c |x - x0|^e, f = c sgn(x - x0) |x - x0|^{e+1} / (e+1).
std::pair<RealFn, RealFn> cusp_power(double c, double x0, double e) {
  return {[c, x0, e](double x) {
            const double d = x - x0;
            return c * std::copysign(std::pow(std::abs(d), e + 1.0), d) / (e + 1.0);
          },
          [c, x0, e](double x) { return c * std::pow(std::abs(x - x0), e); }};
}

TestFunction make(std::pair<RealFn, RealFn> fns, Interval iv, Convexity conv, HModulus h,
                  double q) {
  return TestFunction::create(std::move(fns.first), std::move(fns.second), iv.a, iv.b,
                              ClassCertificate::make(conv, std::move(h), q));
}

// |f'|^q convex (and f' arbitrary sign).
std::pair<RealFn, RealFn> convex_derivative_power(Rng& rng, Interval iv) {
  switch (pick(rng, 3)) {
    case 0: {
      const double c = signed_magnitude(rng, 0.2, 2.0);
      const double k = uniform(rng, -2.0, 2.0);
      return exponential(c, k);
    }
    case 1: {
      const double c0 = uniform(rng, -2.0, 2.0);
      const double c1 = uniform(rng, -2.0, 2.0);
      const double c2 = signed_magnitude(rng, 0.1, 2.0);
      return polynomial({c0, c1, c2});
    }
    default: {
      const double c = signed_magnitude(rng, 0.2, 2.0);
      const double m = uniform(rng, 2.0, 5.0);
      const double x0 = iv.a - uniform(rng, 0.05, 1.0);
      return rising_power(c, x0, m - 1.0);
    }
  }
}

// |f'|^q = |c|^q (x - x0)^r or (x1 - x)^r, r in [lo, hi].
std::pair<RealFn, RealFn> root_derivative_power(Rng& rng, Interval iv, double q, double lo,
                                                double hi) {
  const double c = signed_magnitude(rng, 0.2, 2.0);
  const double r = uniform(rng, lo, hi);
  const double gap = uniform(rng, 0.05, 1.0);
  if (uniform01(rng) < 0.5) return rising_power(c, iv.a - gap, r / q);
  return falling_power(c, iv.b + gap, r / q);
}

}  // namespace

std::string to_string(WitnessClass c) {
  switch (c) {
    case WitnessClass::Convex:
      return "convex";
    case WitnessClass::SConvex:
      return "s-convex";
    case WitnessClass::PFunction:
      return "p-function";
    case WitnessClass::Concave:
      return "concave";
    case WitnessClass::ConcaveSquared:
      return "concave-t2";
  }
  return "?";
}

HModulus squared_modulus() {
  return HModulus::custom([](double t) { return t * t; }, true, "t^2");
}

SmoothCase random_smooth(Rng& rng) {
  switch (pick(rng, 3)) {
    case 0: {
      const Interval iv = draw_interval(rng, -2.0, 2.0, 0.1, 3.0);
      const std::size_t degree = 1 + pick(rng, 5);
      std::vector<double> c(degree + 1);
      for (double& v : c) v = uniform(rng, -2.0, 2.0);
      auto [f, fp] = polynomial(std::move(c));
      return {"poly", std::move(f), std::move(fp), iv.a, iv.b};
    }
    case 1: {
      const Interval iv = draw_interval(rng, 0.1, 2.0, 0.1, 3.0);
      const double beta = uniform(rng, 0.2, 3.0);
      const double r = uniform(rng, 0.5, 4.0);
      auto [f, fp] = rising_power(beta * r, 0.0, r - 1.0);
      return {"pow", std::move(f), std::move(fp), iv.a, iv.b};
    }
    default: {
      const Interval iv = draw_interval(rng, -2.0, 2.0, 0.1, 3.0);
      const double c = uniform(rng, -2.0, 2.0);
      const double k = uniform(rng, -2.0, 2.0);
      auto [f, fp] = exponential(c, k);
      return {"exp", std::move(f), std::move(fp), iv.a, iv.b};
    }
  }
}

TestFunction random_witness(Rng& rng, WitnessClass cls, double q, double s) {
  const Interval iv = draw_interval(rng, -2.0, 2.0, 0.05, 2.0);
  switch (cls) {
    case WitnessClass::Convex:
      return make(convex_derivative_power(rng, iv), iv, Convexity::HConvex,
                  HModulus::identity(), q);
    case WitnessClass::SConvex: {
      // Nonnegative convex functions and r-powers with s <= r <= 1 are s-convex.
      auto fns = uniform01(rng) < 0.5 ? convex_derivative_power(rng, iv)
                                      : root_derivative_power(rng, iv, q, s, 1.0);
      return make(std::move(fns), iv, Convexity::HConvex, HModulus::power(s), q);
    }
    case WitnessClass::PFunction: {
      if (uniform01(rng) < 0.5) {
        return make(convex_derivative_power(rng, iv), iv, Convexity::HConvex,
                    HModulus::constant(), q);
      }
      // Quasi-convex |x - x0|^r. The kink sits halfway between two of the
      // points TestFunction samples so the difference check stays smooth.
      const double c = signed_magnitude(rng, 0.2, 2.0);
      const double r = uniform(rng, 0.1, 2.0);
      const double x0 = iv.a + (iv.b - iv.a) * (static_cast<double>(pick(rng, 12)) + 0.5) / 12.0;
      return make(cusp_power(c, x0, r / q), iv, Convexity::HConvex, HModulus::constant(), q);
    }
    case WitnessClass::Concave:
      return make(root_derivative_power(rng, iv, q, 0.05, 1.0), iv, Convexity::HConcave,
                  HModulus::identity(), q);
    case WitnessClass::ConcaveSquared:
      return make(root_derivative_power(rng, iv, q, 0.05, 1.0), iv, Convexity::HConcave,
                  squared_modulus(), q);
  }
  throw DomainError("random_witness: unknown class");
}

namespace {

HadamardCase convex_case(Rng& rng, HModulus h) {
  const Interval iv = draw_interval(rng, -2.0, 2.0, 0.05, 3.0);
  switch (pick(rng, 3)) {
    case 0: {
      const double c0 = uniform(rng, -2.0, 2.0);
      const double c1 = uniform(rng, -2.0, 2.0);
      const double c2 = uniform(rng, 0.1, 2.0);
      return {"quadratic", polynomial({c0, c1, c2}).first, iv.a, iv.b, std::move(h)};
    }
    case 1: {
      const double c = uniform(rng, 0.2, 2.0);
      const double k = uniform(rng, -2.0, 2.0);
      return {"exp", exponential(c, k).first, iv.a, iv.b, std::move(h)};
    }
    default: {
      const double beta = uniform(rng, 0.2, 2.0);
      const double m = uniform(rng, 1.0, 4.0);
      const double x0 = uniform(rng, iv.a - 1.0, iv.b + 1.0);
      return {"abs-power",
              [beta, m, x0](double x) { return beta * std::pow(std::abs(x - x0), m); }, iv.a,
              iv.b, std::move(h)};
    }
  }
}

HadamardCase sconvex_case(Rng& rng, double s) {
  const Interval iv = draw_interval(rng, 0.0, 2.0, 0.05, 3.0);
  const std::size_t terms = 1 + pick(rng, 3);
  std::vector<std::pair<double, double>> parts;
  for (std::size_t i = 0; i < terms; ++i) {
    const double beta = uniform(rng, 0.1, 2.0);
    const double r = uniform01(rng) < 0.5 ? uniform(rng, s, 1.0) : uniform(rng, 1.0, 3.0);
    parts.emplace_back(beta, r);
  }
  RealFn f = [parts](double x) {
    double acc = 0.0;
    for (const auto& [beta, r] : parts) acc += beta * std::pow(x, r);
    return acc;
  };
  return {"power-sum", std::move(f), iv.a, iv.b, HModulus::power(s)};
}

HadamardCase godunova_levin_case(Rng& rng) {
  switch (pick(rng, 3)) {
    case 0: {
      const Interval iv = draw_interval(rng, 0.0, 2.0, 0.05, 3.0);
      const double beta = uniform(rng, 0.1, 2.0);
      const double r = uniform(rng, 0.1, 3.0);
      return {"monotone-power", [beta, r](double x) { return beta * std::pow(x, r); }, iv.a,
              iv.b, HModulus::reciprocal()};
    }
    case 1: {
      const Interval iv = draw_interval(rng, -2.0, 2.0, 0.05, 3.0);
      const double c = uniform(rng, 0.2, 2.0);
      const double k = uniform(rng, -2.0, 2.0);
      return {"exp", exponential(c, k).first, iv.a, iv.b, HModulus::reciprocal()};
    }
    default: {
      const Interval iv = draw_interval(rng, -2.0, 2.0, 0.05, 3.0);
      const double beta = uniform(rng, 0.1, 2.0);
      const double x0 = uniform(rng, iv.a - 1.0, iv.b + 1.0);
      const double floor = uniform(rng, 0.0, 1.0);
      return {"shifted-square",
              [beta, x0, floor](double x) { return beta * (x - x0) * (x - x0) + floor; }, iv.a,
              iv.b, HModulus::reciprocal()};
    }
  }
}

HadamardCase p_function_case(Rng& rng) {
  const Interval iv = draw_interval(rng, -2.0, 2.0, 0.05, 3.0);
  if (uniform01(rng) < 0.5) {
    const double c = uniform(rng, 0.2, 2.0);
    const double k = uniform(rng, -2.0, 2.0);
    return {"exp", exponential(c, k).first, iv.a, iv.b, HModulus::constant()};
  }
  const double beta = uniform(rng, 0.1, 2.0);
  const double r = uniform(rng, 0.1, 2.0);
  const double x0 = uniform(rng, iv.a - 0.5, iv.b + 0.5);
  const double floor = uniform(rng, 0.0, 1.0);
  return {"quasi-convex",
          [beta, r, x0, floor](double x) { return beta * std::pow(std::abs(x - x0), r) + floor; },
          iv.a, iv.b, HModulus::constant()};
}

}  // namespace

HadamardCase random_hadamard(Rng& rng, HadamardVariant variant, double s) {
  switch (variant) {
    case HadamardVariant::Classical:
      return convex_case(rng, HModulus::identity());
    case HadamardVariant::SConvex:
      return sconvex_case(rng, s);
    case HadamardVariant::GodunovaLevin:
      return godunova_levin_case(rng);
    case HadamardVariant::PFunction:
      return p_function_case(rng);
    case HadamardVariant::HConvex:
      switch (pick(rng, 3)) {
        case 0:
          return convex_case(rng, HModulus::identity());
        case 1:
          return sconvex_case(rng, s);
        default:
          return p_function_case(rng);
      }
  }
  throw DomainError("random_hadamard: unknown variant");
}

}  // namespace hconv::corpus
