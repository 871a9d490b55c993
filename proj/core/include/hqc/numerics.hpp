#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "hqc/error.hpp"

namespace hqc::num {

/// Step for fourth-order central differences around a point of norm `scale`:
/// max(1, scale) * eps^(1/5).
double fd_step(double scale);

/// Fourth-order central difference of a scalar or complex function of one
/// real variable. Throws NonFiniteDerivative if the stencil is not finite.
template <class F>
auto central_diff(F&& f, double x, double h) -> decltype(f(x)) {
  using R = decltype(f(x));
  const R fm2 = f(x - 2.0 * h);
  const R fm1 = f(x - h);
  const R fp1 = f(x + h);
  const R fp2 = f(x + 2.0 * h);
  const R d = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  if constexpr (std::is_floating_point_v<R>) {
    if (!std::isfinite(d)) fail(ErrorCode::NonFiniteDerivative, "difference quotient is not finite");
  } else {
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
      fail(ErrorCode::NonFiniteDerivative, "difference quotient is not finite");
  }
  return d;
}

/// Finite-difference weights for derivatives 0..max_order at x0 using the
/// nodes `x` (Fornberg's recursion). Result is indexed [order][node].
std::vector<std::vector<double>> fornberg_weights(double x0, std::span<const double> x, int max_order);

/// Five-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre5 {
  static constexpr std::array<double, 5> nodes{
      -0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
      0.5384693101056830910363144, 0.9061798459386639927976269};
  static constexpr std::array<double, 5> weights{
      0.2369268850561890875142640, 0.4786286704993664680412915, 0.5688888888888888888888889,
      0.4786286704993664680412915, 0.2369268850561890875142640};

  template <class F>
  static auto apply(F&& f, double a, double b) -> decltype(f(a)) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(a)) sum{};
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * f(mid + half * nodes[k]);
    return half * sum;
  }
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 24;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class F, class R>
R adaptive_step(F& f, double a, double b, R whole, double tol, int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const R left = GaussLegendre5::apply(f, a, m);
  const R right = GaussLegendre5::apply(f, m, b);
  const R refined = left + right;
  if (magnitude(refined - whole) <= tol) return refined;
  if (depth >= max_depth)
    fail(ErrorCode::QuadratureNonConvergence, "adaptive Gauss-Legendre exceeded maximum depth");
  return adaptive_step(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
         adaptive_step(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

/// Adaptive bisection with a five-point Gauss-Legendre rule on each panel.
/// A panel is accepted once the two-halves estimate agrees with the whole
/// panel estimate to within its share of the tolerance. The tolerance never
/// drops below the rounding level of the integral of |f|.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) -> decltype(f(a)) {
  using R = decltype(f(a));
  if (a == b) return R{};
  R whole{};
  double mass = 0.0;  // integral of |f|, for the roundoff floor
  {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < GaussLegendre5::nodes.size(); ++k) {
      const R v = f(mid + half * GaussLegendre5::nodes[k]);
      whole += GaussLegendre5::weights[k] * v;
      mass += GaussLegendre5::weights[k] * detail::magnitude(v);
    }
    whole *= half;
    mass *= std::abs(half);
  }
  // a cancelling integrand cannot be resolved below the rounding noise of |f|
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * mass;
  const double tol = std::max({opt.abs_tol, opt.rel_tol * detail::magnitude(whole), noise});
  R value = detail::adaptive_step(f, a, b, whole, tol, 0, opt.max_depth);
  if constexpr (std::is_floating_point_v<R>) {
    if (!std::isfinite(value)) fail(ErrorCode::QuadratureNonConvergence, "integral is not finite");
  } else {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      fail(ErrorCode::QuadratureNonConvergence, "integral is not finite");
  }
  return value;
}

double mean(std::span<const double> v);
double stdev(std::span<const double> v);

}  // namespace hqc::num
