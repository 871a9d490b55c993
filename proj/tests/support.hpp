#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hqc/point.hpp"

namespace hqc::test {

inline constexpr double pi = std::numbers::pi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline HeisPoint random_heis(double scale = 2.0) {
  return {cplx{uniform(-scale, scale), uniform(-scale, scale)}, uniform(-scale, scale)};
}

inline StarPoint random_star() {
  const double r = std::exp(uniform(std::log(0.25), std::log(4.0)));
  return {std::polar(r, uniform(-pi, pi)), uniform(-2.0, 2.0)};
}

inline double dist(cplx a, cplx b) { return std::abs(a - b); }

inline double dist(const HeisPoint& a, const HeisPoint& b) { return std::abs(a.z - b.z) + std::abs(a.t - b.t); }

// hyperbolic area of the Euclidean disk |zeta + a| < rho (a > rho) under
// |dzeta|^2 / (4 xi^2): a quarter of 2 pi (cosh R - 1), cosh R = a / sqrt(a^2 - rho^2)
inline double hyperbolic_disk_area(double a, double rho) {
  return 0.5 * pi * (a / std::sqrt(a * a - rho * rho) - 1.0);
}

}  // namespace hqc::test
