#ifndef HCONV_QUADRATURE_HPP
#define HCONV_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>

namespace hconv {

using RealFn = std::function<double(double)>;

/// Stopping rule for the adaptive integrator: success once the summed error
/// estimate drops below max(absolute, relative * |value|).
struct Tolerance {
  double absolute = 1e-12;
  double relative = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

inline constexpr std::size_t kDefaultMaxIntervals = 1'000'000;

/// Globally adaptive bisection driven by the 10-point Gauss / 21-point
/// Kronrod pair. The interval with the largest error estimate is split
/// until the total estimate meets the tolerance. Nodes are strictly
/// interior, so integrable endpoint singularities are never sampled.
///
/// Throws DomainError for a > b or a non-positive tolerance,
/// NonFiniteSample when g returns inf/nan at a node, and
/// ToleranceNotReached when the cap is hit or the remaining error is pure
/// roundoff that further bisection cannot reduce.
QuadratureResult integrate_adaptive(const RealFn& g, double a, double b,
                                    Tolerance tol,
                                    std::size_t max_intervals = kDefaultMaxIntervals);

/// Absolute-tolerance convenience overload.
QuadratureResult integrate_adaptive(const RealFn& g, double a, double b,
                                    double tol);

/// Integrates over [a, b] split at the given interior breakpoints (points
/// outside (a, b) are ignored). Each piece gets an equal share of the
/// absolute tolerance.
QuadratureResult integrate_split(const RealFn& g, double a, double b,
                                 std::span<const double> breakpoints,
                                 Tolerance tol);

}  // namespace hconv

#endif  // HCONV_QUADRATURE_HPP
