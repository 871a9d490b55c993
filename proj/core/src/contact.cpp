#include "hqc/contact.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <vector>

#include "hqc/frames.hpp"
#include "hqc/numerics.hpp"

namespace hqc {

namespace {

void fill_logs(FrameDerivatives& d) {
  if (std::abs(d.f) < kMinStarModulus) {
    if (d.frame == GroupKind::star) fail(ErrorCode::ZeroImage, "f_I vanishes");
    return;
  }
  if (d.exact_logs) return;
  d.ZLog = d.Zf / d.f;
  d.ZbLog = d.Zbf / d.f;
  d.TLog = d.Tf / d.f;
}

void check_point(GroupKind kind, const HeisPoint& p) {
  if (kind == GroupKind::star) (void)StarPoint(p);
}

}  // namespace

FrameDerivatives identity_derivatives(GroupKind kind, const HeisPoint& p) {
  check_point(kind, p);
  FrameDerivatives d;
  d.frame = kind;
  d.f = p.z;
  d.f3 = p.t;
  if (kind == GroupKind::star) {
    const double r2 = std::norm(p.z);
    d.Zf = p.z;
    d.Tf = I * p.z;
    d.Zf3 = cplx{0.0, r2};
    d.Zbf3 = cplx{0.0, -r2};
    d.ZLog = 1.0;
    d.TLog = I;
    d.exact_logs = true;
  } else {
    d.Zf = 1.0;
    d.Zf3 = I * std::conj(p.z);
    d.Zbf3 = -I * p.z;
    d.Tf3 = 1.0;
  }
  fill_logs(d);
  return d;
}

FrameDerivatives frame_derivatives(const StarMap& F, const HeisPoint& p, DerivativeMode mode,
                                   std::optional<GroupKind> frame) {
  const GroupKind kind = frame.value_or(F.kind);
  check_point(kind, p);
  if (mode == DerivativeMode::automatic && F.analytic && kind == F.kind) {
    FrameDerivatives d = F.analytic(p);
    d.frame = kind;
    fill_logs(d);
    return d;
  }
  FrameDerivatives d;
  d.frame = kind;
  d.f = F.f_I(p);
  d.f3 = F.f_3(p);
  if (kind == GroupKind::star && std::abs(d.f) < kMinStarModulus) fail(ErrorCode::ZeroImage, "f_I vanishes");
  const CoordGradient gI = coordinate_gradient([&](const HeisPoint& q) { return F.f_I(q); }, p);
  const CoordGradient g3 = coordinate_gradient([&](const HeisPoint& q) { return cplx{F.f_3(q), 0.0}; }, p);
  const bool star = kind == GroupKind::star;
  const Field fz = star ? Field::StarZ : Field::Z;
  const Field fzb = star ? Field::StarZbar : Field::Zbar;
  const Field ft = star ? Field::StarT : Field::T;
  d.Zf = apply_field(fz, gI, p);
  d.Zbf = apply_field(fzb, gI, p);
  d.Tf = apply_field(ft, gI, p);
  d.Zf3 = apply_field(fz, g3, p);
  d.Zbf3 = apply_field(fzb, g3, p);
  d.Tf3 = apply_field(ft, g3, p);
  fill_logs(d);
  return d;
}

ContactResiduals contact_residuals(const FrameDerivatives& d) {
  ContactResiduals r;
  if (d.frame == GroupKind::star) {
    const double m = 2.0 * std::norm(d.f);
    r.R1 = d.Zf3 / m + (d.ZLog - std::conj(d.ZbLog)) / (2.0 * I);
    r.R2 = d.Zbf3 / m + (d.ZbLog - std::conj(d.ZLog)) / (2.0 * I);
    r.R3 = d.Tf3.real() / m + d.TLog.imag();
    r.lambda = std::norm(d.ZLog) - std::norm(d.ZbLog);
  } else {
    const cplx fb = std::conj(d.f);
    r.R1 = d.Zf3 - I * (fb * d.Zf - d.f * std::conj(d.Zbf));
    r.R2 = d.Zbf3 - I * (fb * d.Zbf - d.f * std::conj(d.Zf));
    r.R3 = d.Tf3.real() + 2.0 * std::imag(fb * d.Tf);
    r.lambda = std::norm(d.Zf) - std::norm(d.Zbf);
  }
  return r;
}

ContactResiduals contact_residuals(const StarMap& F, const HeisPoint& p, DerivativeMode mode) {
  return contact_residuals(frame_derivatives(F, p, mode));
}

double lambda_star(const StarMap& F, const HeisPoint& p, DerivativeMode mode) {
  const double l = contact_residuals(F, p, mode).lambda;
  if (!(l > 0.0)) fail(ErrorCode::OrientationReversed, "contact multiplier is not positive");
  return l;
}

namespace {

std::pair<cplx, cplx> holo_pair(const FrameDerivatives& d) {
  if (d.frame == GroupKind::star) return {d.ZLog, d.ZbLog};
  return {d.Zf, d.Zbf};
}

}  // namespace

Distortion distortion(const FrameDerivatives& d) {
  const auto [a, b] = holo_pair(d);
  Distortion out;
  out.lambda1 = std::abs(a) + std::abs(b);
  out.lambda2 = std::abs(a) - std::abs(b);
  if (!(out.lambda2 > 0.0)) fail(ErrorCode::DegenerateMap, "lambda2 <= 0: not quasiconformal here");
  out.K = out.lambda1 / out.lambda2;
  return out;
}

Distortion distortion(const StarMap& F, const HeisPoint& p, DerivativeMode mode) {
  return distortion(frame_derivatives(F, p, mode));
}

cplx beltrami(const FrameDerivatives& d) {
  if (std::abs(d.Zf) < 1e-300) fail(ErrorCode::DegenerateMap, "Z f_I vanishes");
  return d.Zbf / d.Zf;
}

cplx beltrami(const StarMap& F, const HeisPoint& p, DerivativeMode mode) {
  return beltrami(frame_derivatives(F, p, mode));
}

cplx beltrami_fII(const FrameDerivatives& d) {
  const cplx fb = std::conj(d.f);
  const cplx z = -(fb * d.Zf + d.f * std::conj(d.Zbf)) + I * d.Zf3;
  const cplx zb = -(fb * d.Zbf + d.f * std::conj(d.Zf)) + I * d.Zbf3;
  if (std::abs(z) < 1e-300) fail(ErrorCode::DegenerateMap, "Z f_II vanishes");
  return zb / z;
}

cplx T_fII(const FrameDerivatives& d) {
  return cplx{-2.0 * std::real(std::conj(d.f) * d.Tf), d.Tf3.real()};
}

Eigen::Matrix3d coordinate_jacobian(const StarMap& F, const HeisPoint& p) {
  const double h = num::fd_step(std::hypot(std::abs(p.z), p.t));
  Eigen::Matrix3d J;
  for (int j = 0; j < 3; ++j) {
    auto shifted = [&](double s) {
      HeisPoint q = p;
      if (j == 0) q.z += s;
      if (j == 1) q.z += cplx{0.0, s};
      if (j == 2) q.t += s;
      return q;
    };
    const cplx df = num::central_diff([&](double s) { return F.f_I(shifted(s)); }, 0.0, h);
    const double d3 = num::central_diff([&](double s) { return F.f_3(shifted(s)); }, 0.0, h);
    J(0, j) = df.real();
    J(1, j) = df.imag();
    J(2, j) = d3;
  }
  return J;
}

double jacobian_determinant(const StarMap& F, const HeisPoint& p) {
  check_point(F.kind, p);
  const double det = coordinate_jacobian(F, p).determinant();
  if (F.kind == GroupKind::heis) return det;
  const cplx f = F.f_I(p);
  if (std::abs(f) < kMinStarModulus) fail(ErrorCode::ZeroImage, "f_I vanishes");
  const double ratio = std::norm(p.z) / std::norm(f);
  return det * ratio * ratio;
}

double pullback_residual(const StarMap& F, const HeisPoint& p, double lambda) {
  check_point(F.kind, p);
  const Form form = F.kind == GroupKind::star ? Form::omega_star : Form::omega;
  const Eigen::Matrix3d J = coordinate_jacobian(F, p);
  const HeisPoint q = F(p);
  const Tangent basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    const Tangent pushed{J(0, j), J(1, j), J(2, j)};
    const double r = eval_form(form, q, pushed) - lambda * eval_form(form, p, basis[j]);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

ContactReport contact_report(const StarMap& F, const HeisPoint& p, DerivativeMode mode) {
  const FrameDerivatives d = frame_derivatives(F, p, mode);
  const ContactResiduals r = contact_residuals(d);
  ContactReport rep;
  rep.point = p;
  rep.R1 = r.R1;
  rep.R2 = r.R2;
  rep.R3_minus_lambda = r.R3 - r.lambda;
  rep.lambda_star = r.lambda;
  const Distortion dist = distortion(d);
  rep.lambda1 = dist.lambda1;
  rep.lambda2 = dist.lambda2;
  rep.K = dist.K;
  rep.mu = beltrami(d);
  rep.jacobian = jacobian_determinant(F, p);
  const double l2 = r.lambda * r.lambda;
  rep.jacobian_residual = std::abs(rep.jacobian - l2) / l2;
  return rep;
}

CirclesCheck circles_preserving_check(const StarMap& F, std::span<const HeisPoint> grid, double tol,
                                      DerivativeMode mode) {
  CirclesCheck out;
  std::vector<double> lambdas;
  lambdas.reserve(grid.size());
  for (const HeisPoint& p : grid) {
    const FrameDerivatives d = frame_derivatives(F, p, mode);
    out.max_T_fII = std::max(out.max_T_fII, std::abs(T_fII(d)));
    lambdas.push_back(contact_residuals(d).lambda);
  }
  out.lambda_stdev = num::stdev(lambdas);
  out.preserving = out.max_T_fII < tol && out.lambda_stdev < tol;
  return out;
}

}  // namespace hqc
