#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hqc/numerics.hpp"

using namespace hqc;

TEST(Numerics, StepScalesWithPointNorm) {
  const double base = std::pow(std::numeric_limits<double>::epsilon(), 0.2);
  EXPECT_DOUBLE_EQ(num::fd_step(0.3), base);
  EXPECT_DOUBLE_EQ(num::fd_step(4.0), 4.0 * base);
}

TEST(Numerics, CentralDifferenceIsFourthOrder) {
  const double h = num::fd_step(1.0);
  EXPECT_NEAR(num::central_diff([](double x) { return std::sin(x); }, 0.3, h), std::cos(0.3), 1e-11);
  const auto d = num::central_diff([](double x) { return std::complex<double>(x * x, x * x * x); }, 2.0, h);
  EXPECT_NEAR(d.real(), 4.0, 1e-10);
  EXPECT_NEAR(d.imag(), 12.0, 1e-10);
}

TEST(Numerics, CentralDifferenceRejectsNonFiniteStencil) {
  try {
    num::central_diff([](double x) { return std::log(x); }, 1e-5, 1e-3);
    FAIL() << "expected NonFiniteDerivative";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteDerivative);
  }
}

TEST(Numerics, FornbergReproducesTheFivePointStencil) {
  const std::vector<double> x{-2, -1, 0, 1, 2};
  const auto w = num::fornberg_weights(0.0, x, 1);
  const double expected[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
  for (int j = 0; j < 5; ++j) {
    EXPECT_NEAR(w[1][j], expected[j], 1e-15);
    EXPECT_NEAR(w[0][j], j == 2 ? 1.0 : 0.0, 1e-15);
  }
}

TEST(Numerics, FornbergInterpolatesOffNode) {
  const std::vector<double> x{0.0, 0.3, 0.7, 1.2, 2.0};
  const auto w = num::fornberg_weights(0.5, x, 1);
  double v = 0.0, d = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double f = x[j] * x[j] * x[j] - 2.0 * x[j];
    v += w[0][j] * f;
    d += w[1][j] * f;
  }
  EXPECT_NEAR(v, 0.125 - 1.0, 1e-13);
  EXPECT_NEAR(d, 0.75 - 2.0, 1e-13);
}

TEST(Numerics, GaussLegendreIsExactToDegreeNine) {
  const double v = num::GaussLegendre5::apply([](double x) { return std::pow(x, 9); }, 0.0, 1.0);
  EXPECT_NEAR(v, 0.1, 1e-15);
}

TEST(Numerics, AdaptiveIntegration) {
  EXPECT_NEAR(num::integrate([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0, 1e-13);
  EXPECT_NEAR(num::integrate([](double x) { return 1.0 / (1.0 + 100.0 * x * x); }, -1.0, 1.0),
              0.2 * std::atan(10.0), 1e-12);
  EXPECT_EQ(num::integrate([](double x) { return x; }, 1.0, 1.0), 0.0);
}

TEST(Numerics, AdaptiveIntegrationGivesUp) {
  num::QuadratureOptions opt;
  opt.max_depth = 3;
  try {
    num::integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, opt);
    FAIL() << "expected QuadratureNonConvergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuadratureNonConvergence);
  }
}

TEST(Numerics, MeanAndDeviation) {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  EXPECT_DOUBLE_EQ(num::mean(v), 2.5);
  EXPECT_NEAR(num::stdev(v), std::sqrt(1.25), 1e-15);
}
