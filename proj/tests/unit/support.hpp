#ifndef HCONV_TEST_SUPPORT_HPP
#define HCONV_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <utility>

#include "hconv/classes.hpp"

namespace testing {

inline hconv::TestFunction make_tf(hconv::RealFn f, hconv::RealFn fp, double a, double b,
                                   hconv::HModulus h, double q = 1.0,
                                   hconv::Convexity c = hconv::Convexity::HConvex) {
  return hconv::TestFunction::create(std::move(f), std::move(fp), a, b,
                                     hconv::ClassCertificate::make(c, std::move(h), q));
}

inline hconv::TestFunction square(double a = 0.0, double b = 1.0,
                                  hconv::HModulus h = hconv::HModulus::identity(),
                                  double q = 1.0) {
  return make_tf([](double x) { return x * x; }, [](double x) { return 2.0 * x; }, a, b,
                 std::move(h), q);
}

inline hconv::TestFunction exponential(double a = 0.0, double b = 1.0, double q = 1.0,
                                       hconv::HModulus h = hconv::HModulus::identity()) {
  return make_tf([](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }, a,
                 b, std::move(h), q);
}

inline double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max({1e-300, std::abs(x), std::abs(y)});
}

}  // namespace testing

#endif
