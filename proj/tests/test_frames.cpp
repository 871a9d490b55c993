#include <gtest/gtest.h>

#include "hqc/frames.hpp"
#include "hqc/group.hpp"
#include "support.hpp"

using namespace hqc;

namespace {

const ScalarFunction kProbe = [](const HeisPoint& p) {
  return cplx{p.x() * p.x() * p.y() + std::sin(p.t), std::cos(p.x() - p.t) + p.y() * p.t};
};

// Field coefficients applied to the exact probe gradient
cplx probe_field(const std::array<cplx, 3>& c, const HeisPoint& p) {
  const double x = p.x(), y = p.y(), t = p.t;
  const cplx gx{2 * x * y, -std::sin(x - t)};
  const cplx gy{x * x, t};
  const cplx gt{std::cos(t), std::sin(x - t) + y};
  return c[0] * gx + c[1] * gy + c[2] * gt;
}

}  // namespace

TEST(Frames, CoefficientsMatchClosedForms) {
  const HeisPoint p{cplx(0.7, -1.3), 0.4};
  const auto X = field_coefficients(Field::X, p);
  EXPECT_EQ(X[2], cplx(2 * -1.3));
  const auto Y = field_coefficients(Field::Y, p);
  EXPECT_EQ(Y[2], cplx(-2 * 0.7));
  const auto SY = field_coefficients(Field::StarY, p);
  EXPECT_EQ(SY[0], cplx(1.3));
  EXPECT_DOUBLE_EQ(SY[2].real(), -2 * std::norm(p.z));
  const auto ST = field_coefficients(Field::StarT, p);
  EXPECT_EQ(ST[2], cplx(0.0));
}

TEST(Frames, StarZIsZTimesZ) {
  for (int k = 0; k < 50; ++k) {
    const StarPoint p = test::random_star();
    const auto a = field_coefficients(Field::StarZ, p), b = field_coefficients(Field::Z, p);
    const auto ab = field_coefficients(Field::StarZbar, p), bb = field_coefficients(Field::Zbar, p);
    for (int i = 0; i < 3; ++i) {
      EXPECT_LT(std::abs(a[i] - p.z * b[i]), 1e-13 * (1 + std::abs(a[i])));
      EXPECT_LT(std::abs(ab[i] - std::conj(p.z) * bb[i]), 1e-13 * (1 + std::abs(ab[i])));
    }
  }
}

TEST(Frames, DifferencedFieldsMatchExactGradients) {
  for (Field f : {Field::X, Field::Y, Field::T, Field::Z, Field::StarX, Field::StarY, Field::StarT, Field::StarZbar}) {
    for (int k = 0; k < 20; ++k) {
      const StarPoint p = test::random_star();
      const cplx expect = probe_field(field_coefficients(f, p), p);
      EXPECT_LT(std::abs(apply_field(f, kProbe, p) - expect), 1e-8 * (1 + std::abs(expect)));
    }
  }
}

TEST(Frames, TRotatesTheArgument) {
  const ScalarFunction arg = [](const HeisPoint& p) { return cplx(std::arg(p.z)); };
  for (int k = 0; k < 50; ++k) {
    StarPoint p = test::random_star();
    if (std::abs(std::arg(p.z)) > 3.0) continue;
    EXPECT_NEAR(apply_field(Field::StarT, arg, p).real(), 1.0, 1e-9);
  }
}

TEST(Frames, TAnnihilatesFunctionsOfTheKoranyiImage) {
  const ScalarFunction h = [](const HeisPoint& p) {
    const cplx zeta{-std::norm(p.z), p.t};
    return std::exp(zeta) + zeta * zeta * cplx(0.5, 1.0);
  };
  for (int k = 0; k < 50; ++k) EXPECT_LT(std::abs(apply_field(Field::StarT, h, test::random_star())), 1e-9);
}

TEST(Frames, HeisenbergBrackets) {
  for (int k = 0; k < 20; ++k) {
    const HeisPoint p = test::random_heis(1.0);
    const cplx xy = apply_bracket(Field::X, Field::Y, kProbe, p);
    EXPECT_LT(std::abs(xy + 4.0 * apply_field(Field::T, kProbe, p)), 1e-5);
    EXPECT_LT(std::abs(apply_bracket(Field::X, Field::T, kProbe, p)), 1e-5);
    EXPECT_LT(std::abs(apply_bracket(Field::Y, Field::T, kProbe, p)), 1e-5);
  }
}

TEST(Frames, StarBrackets) {
  // [X, Y] = 2(Y - T), [X, T] = [Y, T] = 0
  for (int k = 0; k < 20; ++k) {
    const StarPoint p = test::random_star();
    const double s = 1.0 + std::norm(p.z);
    const cplx xy = apply_bracket(Field::StarX, Field::StarY, kProbe, p);
    const cplx expect = 2.0 * (apply_field(Field::StarY, kProbe, p) - apply_field(Field::StarT, kProbe, p));
    EXPECT_LT(std::abs(xy - expect), 1e-5 * s * s);
    EXPECT_LT(std::abs(apply_bracket(Field::StarX, Field::StarT, kProbe, p)), 1e-5 * s * s);
    EXPECT_LT(std::abs(apply_bracket(Field::StarY, Field::StarT, kProbe, p)), 1e-5 * s * s);
  }
}

TEST(Frames, CoframeIsDual) {
  for (int k = 0; k < 50; ++k) {
    const StarPoint p = test::random_star();
    const FrameVector X{GroupKind::star, p, 1, 0, 0}, Y{GroupKind::star, p, 0, 1, 0}, T{GroupKind::star, p, 0, 0, 1};
    const Form forms[3] = {Form::phi_star, Form::psi_star, Form::omega_star};
    const FrameVector* vs[3] = {&X, &Y, &T};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(eval_form(forms[i], *vs[j]), i == j ? 1.0 : 0.0, 1e-13);
    const HeisPoint q = test::random_heis();
    const FrameVector hX{GroupKind::heis, q, 1, 0, 0}, hY{GroupKind::heis, q, 0, 1, 0}, hT{GroupKind::heis, q, 0, 0, 1};
    EXPECT_NEAR(eval_form(Form::omega, hX), 0.0, 1e-14);
    EXPECT_NEAR(eval_form(Form::omega, hY), 0.0, 1e-14);
    EXPECT_NEAR(eval_form(Form::omega, hT), 1.0, 1e-14);
  }
}

TEST(Frames, ContactVolume) {
  for (int k = 0; k < 50; ++k) {
    const StarPoint p = test::random_star();
    const double r4 = std::norm(p.z) * std::norm(p.z);
    EXPECT_NEAR(contact_volume(GroupKind::star, p) * r4, 1.0, 1e-7);
    EXPECT_NEAR(contact_volume(GroupKind::heis, test::random_heis()), 4.0, 1e-8);
  }
}

TEST(Frames, KoranyiMapIsARiemannianSubmersionOnTheHorizontalFrame) {
  for (int k = 0; k < 50; ++k) {
    const StarPoint p = test::random_star();
    const Tangent X = to_tangent({GroupKind::star, p, 1, 0, 0});
    const Tangent Y = to_tangent({GroupKind::star, p, 0, 1, 0});
    const Tangent T = to_tangent({GroupKind::star, p, 0, 0, 1});
    EXPECT_NEAR(star_metric(p, X, X), 1.0, 1e-13);
    EXPECT_NEAR(star_metric(p, Y, Y), 1.0, 1e-13);
    EXPECT_NEAR(star_metric(p, X, Y), 0.0, 1e-13);
    const cplx zeta = koranyi_alpha(p).zeta;
    const cplx aX = koranyi_pushforward(p, X), aY = koranyi_pushforward(p, Y);
    EXPECT_LT(std::abs(aX + 2.0 * std::norm(p.z)), 1e-9 * (1 + std::norm(p.z)));
    EXPECT_NEAR(hyperbolic_metric(zeta, aX, aX), 1.0, 1e-9);
    EXPECT_NEAR(hyperbolic_metric(zeta, aY, aY), 1.0, 1e-9);
    EXPECT_NEAR(hyperbolic_metric(zeta, aX, aY), 0.0, 1e-9);
    EXPECT_LT(std::abs(koranyi_pushforward(p, T)), 1e-9 * (1 + std::norm(p.z)));
  }
}
