#include "hqc/frames.hpp"

#include <cmath>

#include "hqc/numerics.hpp"

namespace hqc {

bool is_star_field(Field f) {
  switch (f) {
    case Field::StarX:
    case Field::StarY:
    case Field::StarT:
    case Field::StarZ:
    case Field::StarZbar:
      return true;
    default:
      return false;
  }
}

std::array<cplx, 3> field_coefficients(Field f, const HeisPoint& p) {
  const double x = p.x();
  const double y = p.y();
  const double r2 = x * x + y * y;
  const std::array<cplx, 3> hx{1.0, 0.0, 2.0 * y};
  const std::array<cplx, 3> hy{0.0, 1.0, -2.0 * x};
  const std::array<cplx, 3> sx{x, y, 0.0};
  const std::array<cplx, 3> sy{-y, x, -2.0 * r2};
  auto combine = [](const std::array<cplx, 3>& a, const std::array<cplx, 3>& b, cplx s) {
    return std::array<cplx, 3>{0.5 * (a[0] + s * b[0]), 0.5 * (a[1] + s * b[1]), 0.5 * (a[2] + s * b[2])};
  };
  switch (f) {
    case Field::X: return hx;
    case Field::Y: return hy;
    case Field::T: return {0.0, 0.0, 1.0};
    case Field::Z: return combine(hx, hy, -I);
    case Field::Zbar: return combine(hx, hy, I);
    case Field::StarX: return sx;
    case Field::StarY: return sy;
    case Field::StarT: return {-y, x, 0.0};
    case Field::StarZ: return combine(sx, sy, -I);
    case Field::StarZbar: return combine(sx, sy, I);
  }
  return {};
}

CoordGradient coordinate_gradient(const ScalarFunction& h, const HeisPoint& p) {
  const double step = num::fd_step(std::hypot(std::abs(p.z), p.t));
  CoordGradient g;
  g.dx = num::central_diff([&](double s) { return h(HeisPoint{p.z + s, p.t}); }, 0.0, step);
  g.dy = num::central_diff([&](double s) { return h(HeisPoint{p.z + cplx{0.0, s}, p.t}); }, 0.0, step);
  g.dt = num::central_diff([&](double s) { return h(HeisPoint{p.z, p.t + s}); }, 0.0, step);
  return g;
}

cplx apply_field(Field f, const CoordGradient& grad, const HeisPoint& p) {
  if (is_star_field(f)) (void)StarPoint(p);
  const auto c = field_coefficients(f, p);
  return c[0] * grad.dx + c[1] * grad.dy + c[2] * grad.dt;
}

cplx apply_field(Field f, const ScalarFunction& h, const HeisPoint& p) {
  if (is_star_field(f)) (void)StarPoint(p);
  return apply_field(f, coordinate_gradient(h, p), p);
}

cplx apply_bracket(Field a, Field b, const ScalarFunction& h, const HeisPoint& p) {
  const ScalarFunction bh = [&](const HeisPoint& q) { return apply_field(b, h, q); };
  const ScalarFunction ah = [&](const HeisPoint& q) { return apply_field(a, h, q); };
  return apply_field(a, bh, p) - apply_field(b, ah, p);
}

Tangent to_tangent(const FrameVector& v) {
  const Field fx = v.kind == GroupKind::star ? Field::StarX : Field::X;
  const Field fy = v.kind == GroupKind::star ? Field::StarY : Field::Y;
  const Field ft = v.kind == GroupKind::star ? Field::StarT : Field::T;
  if (v.kind == GroupKind::star) (void)StarPoint(v.base);
  const auto cx = field_coefficients(fx, v.base);
  const auto cy = field_coefficients(fy, v.base);
  const auto ct = field_coefficients(ft, v.base);
  Tangent out;
  out.dx = v.a * cx[0].real() + v.b * cy[0].real() + v.c * ct[0].real();
  out.dy = v.a * cx[1].real() + v.b * cy[1].real() + v.c * ct[1].real();
  out.dt = v.a * cx[2].real() + v.b * cy[2].real() + v.c * ct[2].real();
  return out;
}

double eval_form(Form form, const HeisPoint& p, const Tangent& v) {
  const double x = p.x();
  const double y = p.y();
  const double r2 = x * x + y * y;
  const double omega = v.dt + 2.0 * x * v.dy - 2.0 * y * v.dx;
  switch (form) {
    case Form::omega: return omega;
    case Form::phi: return v.dx;
    case Form::psi: return v.dy;
    default: break;
  }
  (void)StarPoint(p);
  switch (form) {
    case Form::omega_star: return omega / (2.0 * r2);
    case Form::phi_star: return (x * v.dx + y * v.dy) / r2;
    case Form::psi_star: return -v.dt / (2.0 * r2);
    default: break;
  }
  return 0.0;
}

double eval_form(Form form, const FrameVector& v) { return eval_form(form, v.base, to_tangent(v)); }

double contact_volume(GroupKind kind, const HeisPoint& p) {
  const Form form = kind == GroupKind::star ? Form::omega_star : Form::omega;
  const Tangent e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto shifted = [&](int axis, double s) {
    HeisPoint q = p;
    if (axis == 0) q.z += s;
    if (axis == 1) q.z += cplx{0.0, s};
    if (axis == 2) q.t += s;
    return q;
  };
  const double h = num::fd_step(std::hypot(std::abs(p.z), p.t));
  // coefficient derivatives: dc[i][j] = d/dx_i (theta(e_j))
  double dc[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      dc[i][j] = num::central_diff([&](double s) { return eval_form(form, shifted(i, s), e[j]); }, 0.0, h);
  auto dtheta = [&](int i, int j) { return dc[i][j] - dc[j][i]; };
  const double th[3] = {eval_form(form, p, e[0]), eval_form(form, p, e[1]), eval_form(form, p, e[2])};
  return th[0] * dtheta(1, 2) - th[1] * dtheta(0, 2) + th[2] * dtheta(0, 1);
}

double hyperbolic_metric(cplx zeta, cplx u, cplx v) {
  if (!(zeta.real() < 0.0)) fail(ErrorCode::LeftHalfPlaneViolation, "metric evaluated outside the half-plane");
  return std::real(u * std::conj(v)) / (4.0 * zeta.real() * zeta.real());
}

double star_metric(const StarPoint& p, const Tangent& u, const Tangent& v) {
  return eval_form(Form::phi_star, p, u) * eval_form(Form::phi_star, p, v) +
         eval_form(Form::psi_star, p, u) * eval_form(Form::psi_star, p, v);
}

cplx koranyi_pushforward(const StarPoint& p, const Tangent& v) {
  const double h = num::fd_step(std::hypot(std::abs(p.z), p.t));
  return num::central_diff(
      [&](double e) {
        const cplx z = p.z + e * cplx{v.dx, v.dy};
        return cplx{-std::norm(z), p.t + e * v.dt};
      },
      0.0, h);
}

}  // namespace hqc
