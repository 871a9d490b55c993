#pragma once

#include <array>
#include <functional>

#include "hqc/point.hpp"

namespace hqc {

/// Left-invariant fields. Plain letters belong to the Heisenberg group,
/// `Star*` to the distinguished frame of the hyperbolic group.
enum class Field { X, Y, T, Z, Zbar, StarX, StarY, StarT, StarZ, StarZbar };

enum class Form {
  omega,       // dt + 2x dy - 2y dx
  omega_star,  // omega / (2|z|^2)
  phi_star,    // d(|z|^2) / (2|z|^2)
  psi_star,    // -dt / (2|z|^2)
  phi,         // dx
  psi,         // dy
};

using ScalarFunction = std::function<cplx(const HeisPoint&)>;

/// Partial derivatives (d/dx, d/dy, d/dt) of a complex scalar.
struct CoordGradient {
  cplx dx{};
  cplx dy{};
  cplx dt{};
};

bool is_star_field(Field f);

/// Coefficients of the field over (d/dx, d/dy, d/dt) at p.
std::array<cplx, 3> field_coefficients(Field f, const HeisPoint& p);

/// Fourth-order central-difference gradient of h at p.
CoordGradient coordinate_gradient(const ScalarFunction& h, const HeisPoint& p);

cplx apply_field(Field f, const CoordGradient& grad, const HeisPoint& p);

/// Directional derivative of h along the field at p. Fields of the hyperbolic
/// group require a valid StarPoint.
cplx apply_field(Field f, const ScalarFunction& h, const HeisPoint& p);

/// [A, B]h = A(Bh) - B(Ah) by nested differences.
cplx apply_bracket(Field a, Field b, const ScalarFunction& h, const HeisPoint& p);

Tangent to_tangent(const FrameVector& v);

double eval_form(Form form, const HeisPoint& p, const Tangent& v);
double eval_form(Form form, const FrameVector& v);

/// (theta ^ d theta)(d/dx, d/dy, d/dt) for the contact form of the given
/// group, with d theta taken by differences of the form's coefficients.
double contact_volume(GroupKind kind, const HeisPoint& p);

/// Hyperbolic metric |d zeta|^2 / (4 Re^2 zeta) on the left half-plane.
double hyperbolic_metric(cplx zeta, cplx u, cplx v);

/// Sub-Riemannian product of the hyperbolic group on coordinate tangents,
/// (phi*)^2 + (psi*)^2.
double star_metric(const StarPoint& p, const Tangent& u, const Tangent& v);

/// d/de alpha(p + e v) at e = 0 by fourth-order differences.
cplx koranyi_pushforward(const StarPoint& p, const Tangent& v);

}  // namespace hqc
