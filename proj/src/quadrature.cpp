#include "hconv/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "hconv/errors.hpp"

namespace hconv {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208814510095, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool roundoff_limited;  // error is the 50*eps*resabs floor
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.error < y.error;
  }
};

double sample(const RealFn& g, double x) {
  const double v = g(x);
  if (!std::isfinite(v)) {
    throw NonFiniteSample("integrand is not finite at x = " + std::to_string(x));
  }
  return v;
}

Segment kronrod21(const RealFn& g, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  std::array<double, 11> fv1{};
  std::array<double, 11> fv2{};
  const double fc = sample(g, centr);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);

  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jtw = 2 * j + 1;
    const double absc = hlgth * kXgk[jtw];
    const double f1 = sample(g, centr - absc);
    const double f2 = sample(g, centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    const double f1 = sample(g, centr - absc);
    const double f2 = sample(g, centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (std::size_t j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  Segment seg{a, b, resk * hlgth, std::abs((resk - resg) * hlgth), false};
  resabs *= dhlgth;
  resasc *= dhlgth;
  if (resasc != 0.0 && seg.error != 0.0) {
    seg.error = resasc * std::min(1.0, std::pow(200.0 * seg.error / resasc, 1.5));
  }
  if (resabs > kTiny / (50.0 * kEps)) {
    const double floor = 50.0 * kEps * resabs;
    if (floor >= seg.error) {
      seg.error = floor;
      seg.roundoff_limited = true;
    }
  }
  return seg;
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFn& g, double a, double b,
                                    Tolerance tol, std::size_t max_intervals) {
  if (!(a <= b)) throw DomainError("integrate_adaptive: requires a <= b");
  if (!(tol.absolute > 0.0) && !(tol.relative > 0.0)) {
    throw DomainError("integrate_adaptive: tolerance must be positive");
  }
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  Segment first = kronrod21(g, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  std::size_t count = 1;

  auto target = [&](double value) {
    return std::max(tol.absolute, tol.relative * std::abs(value));
  };

  while (error > target(total)) {
    Segment worst = heap.top();
    if (worst.roundoff_limited) {
      // Recompute the sums exactly before giving up: the running totals
      // drift slightly over many updates.
      double v = 0.0;
      double e = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        v += copy.top().value;
        e += copy.top().error;
        copy.pop();
      }
      total = v;
      error = e;
      if (error <= target(total)) break;
      throw ToleranceNotReached(
          "integrate_adaptive: roundoff limits the error estimate to " +
          std::to_string(error));
    }
    if (count >= max_intervals) {
      throw ToleranceNotReached("integrate_adaptive: subdivision cap of " +
                                std::to_string(max_intervals) +
                                " intervals reached");
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ToleranceNotReached(
          "integrate_adaptive: interval cannot be bisected further");
    }
    heap.pop();
    const Segment left = kronrod21(g, worst.a, mid);
    const Segment right = kronrod21(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  double v = 0.0;
  double e = 0.0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  return {v, e, count};
}

QuadratureResult integrate_adaptive(const RealFn& g, double a, double b,
                                    double tol) {
  return integrate_adaptive(g, a, b, Tolerance{tol, 0.0});
}

QuadratureResult integrate_split(const RealFn& g, double a, double b,
                                 std::span<const double> breakpoints,
                                 Tolerance tol) {
  if (!(a <= b)) throw DomainError("integrate_split: requires a <= b");
  std::vector<double> nodes{a};
  for (double c : breakpoints) {
    if (c > a && c < b) nodes.push_back(c);
  }
  nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  const auto pieces = static_cast<double>(nodes.size() - 1);
  const Tolerance share{tol.absolute / std::max(1.0, pieces), tol.relative};
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const QuadratureResult r = integrate_adaptive(g, nodes[i], nodes[i + 1], share);
    out.value += r.value;
    out.abs_error_estimate += r.abs_error_estimate;
    out.subdivisions += r.subdivisions;
  }
  return out;
}

}  // namespace hconv
