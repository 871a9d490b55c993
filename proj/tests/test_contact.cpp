#include <gtest/gtest.h>

#include "hqc/catalog.hpp"
#include "hqc/contact.hpp"
#include "hqc/grid.hpp"
#include "hqc/group.hpp"
#include "support.hpp"

using namespace hqc;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::MalformedInput;
}

StarMap star_map(std::function<cplx(const HeisPoint&)> fI, std::function<double(const HeisPoint&)> f3) {
  StarMap F;
  F.f_I = std::move(fI);
  F.f_3 = std::move(f3);
  return F;
}

StarMap identity_star() {
  StarMap F = star_map([](const HeisPoint& p) { return p.z; }, [](const HeisPoint& p) { return p.t; });
  F.analytic = [](const HeisPoint& p) { return identity_derivatives(GroupKind::star, p); };
  return F;
}

}  // namespace

TEST(Contact, IdentityIsExact) {
  const StarMap F = identity_star();
  for (const HeisPoint& p : random_points(50, 7)) {
    const ContactResiduals r = contact_residuals(F, p);
    EXPECT_EQ(r.R1, cplx{});
    EXPECT_EQ(r.R2, cplx{});
    EXPECT_EQ(r.lambda, 1.0);
    const Distortion d = distortion(F, p);
    EXPECT_EQ(d.lambda1, 1.0);
    EXPECT_EQ(d.lambda2, 1.0);
    EXPECT_EQ(d.K, 1.0);
    EXPECT_EQ(beltrami(F, p), cplx{});
  }
}

TEST(Contact, DifferencedIdentity) {
  const StarMap F = identity_star();
  for (const HeisPoint& p : random_points(50, 8)) {
    const FrameDerivatives d = frame_derivatives(F, p, DerivativeMode::finite_difference);
    EXPECT_LT(std::abs(d.ZLog - 1.0), 1e-9);
    EXPECT_LT(std::abs(d.ZbLog), 1e-9);
    const ContactResiduals r = contact_residuals(d);
    EXPECT_LT(std::abs(r.R1), 1e-8);
    EXPECT_NEAR(r.R3 - r.lambda, 0.0, 1e-8);
  }
}

TEST(Contact, LeftTranslation) {
  const StarPoint w{cplx(0.6, 1.1), -0.7};
  const StarMap F = star_map([&](const HeisPoint& p) { return star_mul(w, StarPoint(p)).z; },
                             [&](const HeisPoint& p) { return star_mul(w, StarPoint(p)).t; });
  for (const HeisPoint& p : random_points(30, 9)) {
    const FrameDerivatives d = frame_derivatives(F, p);
    EXPECT_LT(std::abs(d.ZLog - 1.0), 1e-8);
    EXPECT_LT(std::abs(d.ZbLog), 1e-8);
    const ContactResiduals r = contact_residuals(d);
    EXPECT_LT(std::max(std::abs(r.R1), std::abs(r.R2)), 1e-6);
    EXPECT_NEAR(r.lambda, 1.0, 1e-7);
    EXPECT_NEAR(jacobian_determinant(F, p), 1.0, 1e-6);
  }
}

TEST(Contact, NonContactProbe) {
  // F = (z e^t, t): R1 = (i/2)(e^{-2t} - 1) by hand
  const StarMap F = star_map([](const HeisPoint& p) { return p.z * std::exp(p.t); },
                             [](const HeisPoint& p) { return p.t; });
  for (double t : {-1.0, 0.5, 1.0}) {
    const HeisPoint p{std::polar(1.3, 0.4), t};
    const ContactResiduals r = contact_residuals(F, p);
    EXPECT_LT(std::abs(r.R1 - 0.5 * I * (std::exp(-2 * t) - 1.0)), 1e-7);
  }
  EXPECT_GT(std::abs(contact_residuals(F, HeisPoint{1.0, 1.0}).R1), 0.43);
}

TEST(Contact, ReflectionIsDegenerate) {
  const StarMap F = star_map([](const HeisPoint& p) { return std::conj(p.z); },
                             [](const HeisPoint& p) { return -p.t; });
  const HeisPoint p{cplx(0.5, 0.9), 0.3};
  const FrameDerivatives d = frame_derivatives(F, p);
  const ContactResiduals r = contact_residuals(d);
  EXPECT_LT(std::abs(r.R1), 1e-8);
  EXPECT_NEAR(r.lambda, -1.0, 1e-8);
  EXPECT_EQ(code_of([&] { distortion(d); }), ErrorCode::DegenerateMap);
  EXPECT_EQ(code_of([&] { lambda_star(F, p); }), ErrorCode::OrientationReversed);
  EXPECT_EQ(code_of([&] { contact_report(F, p); }), ErrorCode::DegenerateMap);
}

TEST(Contact, ZeroImage) {
  const StarMap F = star_map([](const HeisPoint&) { return cplx{}; }, [](const HeisPoint& p) { return p.t; });
  EXPECT_EQ(code_of([&] { frame_derivatives(F, HeisPoint{1.0, 0.0}); }), ErrorCode::ZeroImage);
}

TEST(Contact, CirclesPreservingProbe) {
  const auto box = unit_box_grid();
  const StarMap F = star_map([](const HeisPoint& p) { return p.z; },
                             [](const HeisPoint& p) { return p.t + p.x(); });
  const CirclesCheck c = circles_preserving_check(F, box, 1e-7, DerivativeMode::finite_difference);
  EXPECT_GT(c.max_T_fII, 0.1);
  EXPECT_FALSE(c.preserving);
  const CirclesCheck id = circles_preserving_check(identity_star(), box);
  EXPECT_EQ(id.max_T_fII, 0.0);
  EXPECT_EQ(id.lambda_stdev, 0.0);
  EXPECT_TRUE(id.preserving);
}

TEST(Contact, HeisenbergFrameIdentityAndIsometries) {
  StarMap id;
  id.kind = GroupKind::heis;
  id.f_I = [](const HeisPoint& p) { return p.z; };
  id.f_3 = [](const HeisPoint& p) { return p.t; };
  const HeisPoint origin{};
  const ContactResiduals r0 = contact_residuals(id, origin);
  EXPECT_LT(std::abs(r0.R1), 1e-9);
  EXPECT_NEAR(r0.lambda, 1.0, 1e-9);
  const HeisPoint w{cplx(1.0, -2.0), 0.5};
  StarMap tr = id;
  tr.f_I = [&](const HeisPoint& p) { return heis_translate(w, p).z; };
  tr.f_3 = [&](const HeisPoint& p) { return heis_translate(w, p).t; };
  StarMap dl = id;
  dl.f_I = [](const HeisPoint& p) { return heis_dilate(1.7, p).z; };
  dl.f_3 = [](const HeisPoint& p) { return heis_dilate(1.7, p).t; };
  for (int k = 0; k < 20; ++k) {
    const HeisPoint p = test::random_heis();
    const ContactResiduals a = contact_residuals(tr, p);
    EXPECT_LT(std::abs(a.R1), 1e-8);
    EXPECT_NEAR(a.lambda, 1.0, 1e-8);
    EXPECT_NEAR(a.R3, a.lambda, 1e-8);
    const ContactResiduals b = contact_residuals(dl, p);
    EXPECT_LT(std::abs(b.R1), 1e-8);
    EXPECT_NEAR(b.lambda, 1.7 * 1.7, 1e-8);
    EXPECT_NEAR(jacobian_determinant(dl, p), std::pow(1.7, 4), 1e-7);
    EXPECT_LT(pullback_residual(dl, p, 1.7 * 1.7), 1e-7);
  }
}

TEST(Contact, TwistBeltramiAndFrameChange) {
  const CatalogEntry e = make_twist(1.0);
  const StarMap F = entry_map(e);
  for (const HeisPoint& p : random_points(40, 11)) {
    const FrameDerivatives ds = frame_derivatives(F, p);
    const cplx zeta = koranyi_alpha(StarPoint(p)).zeta;
    EXPECT_LT(std::abs(beltrami(ds) - e.expected_mu(zeta)), 1e-8);
    EXPECT_LT(std::abs(beltrami_fII(ds) - beltrami(ds)), 1e-7);
    const FrameDerivatives dh = frame_derivatives(F, p, DerivativeMode::finite_difference, GroupKind::heis);
    const cplx mu_h = beltrami(dh);
    EXPECT_LT(std::abs(beltrami(ds) - std::conj(p.z) / p.z * mu_h), 1e-7);
    EXPECT_NEAR(distortion(ds).K, (1 + std::abs(mu_h)) / (1 - std::abs(mu_h)), 1e-6);
  }
}

TEST(Contact, TwistDistortionValue) {
  const StarMap F = entry_map(make_twist(2.0));
  const double mu = 2.0 / std::sqrt(8.0);
  for (const HeisPoint& p : random_points(20, 12)) {
    const ContactReport r = contact_report(F, p);
    EXPECT_NEAR(std::abs(r.mu), mu, 1e-9);
    EXPECT_NEAR(r.K, (1 + mu) / (1 - mu), 1e-6);
    EXPECT_NEAR(r.K, 5.8284, 1e-4);
    EXPECT_NEAR(r.lambda1 * r.lambda2, r.lambda_star, 1e-7);
    EXPECT_GE(r.K, 1.0);
    EXPECT_LE(std::abs(r.mu), (r.K - 1) / (r.K + 1) + 1e-12);
  }
}

TEST(Contact, JacobianMatchesLambdaSquared) {
  // G(z,t) = (z^2/|z|, 2t) pulls omega* back to 2 omega*; by hand ZLog = 3/2, ZbarLog = -1/2
  const StarMap G = star_map([](const HeisPoint& p) { return p.z * p.z / std::abs(p.z); },
                             [](const HeisPoint& p) { return 2.0 * p.t; });
  for (const HeisPoint& p : random_points(40, 13)) {
    const ContactReport r = contact_report(G, p);
    EXPECT_LT(std::abs(r.R1), 1e-6);
    EXPECT_NEAR(r.lambda_star, 2.0, 1e-7);
    EXPECT_NEAR(r.lambda1, 2.0, 1e-7);
    EXPECT_NEAR(r.lambda2, 1.0, 1e-7);
    EXPECT_LT(r.jacobian_residual, 1e-5);
    EXPECT_LT(pullback_residual(G, p, 2.0), 1e-5 * (1 + 1 / std::norm(p.z)));
  }
}
