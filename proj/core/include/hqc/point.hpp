#pragma once

#include <cmath>
#include <complex>

#include "hqc/error.hpp"

namespace hqc {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Smallest |z| accepted for a point of the hyperbolic Heisenberg group.
inline constexpr double kMinStarModulus = 1e-150;

/// A point (z, t) of the Heisenberg group C x R. Also used as plain
/// coordinates for maps defined on either group.
struct HeisPoint {
  cplx z{};
  double t = 0.0;

  HeisPoint() = default;
  HeisPoint(cplx z_, double t_) : z(z_), t(t_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(t))
      fail(ErrorCode::InvalidPoint, "non-finite Heisenberg coordinates");
  }

  double x() const { return z.real(); }
  double y() const { return z.imag(); }
};

/// A point of the hyperbolic Heisenberg group C_* x R.
struct StarPoint {
  cplx z{1.0, 0.0};
  double t = 0.0;

  StarPoint() = default;
  StarPoint(cplx z_, double t_) : z(z_), t(t_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(t))
      fail(ErrorCode::InvalidPoint, "non-finite coordinates");
    if (std::abs(z) <= kMinStarModulus)
      fail(ErrorCode::InvalidPoint, "StarPoint requires z != 0");
  }
  explicit StarPoint(const HeisPoint& p) : StarPoint(p.z, p.t) {}

  operator HeisPoint() const { return HeisPoint{z, t}; }

  double x() const { return z.real(); }
  double y() const { return z.imag(); }
};

/// A point of the left half-plane Re(zeta) < 0.
struct HypPoint {
  cplx zeta{-1.0, 0.0};

  HypPoint() = default;
  explicit HypPoint(cplx zeta_) : zeta(zeta_) {
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
      fail(ErrorCode::InvalidPoint, "non-finite zeta");
    if (!(zeta.real() < 0.0))
      fail(ErrorCode::LeftHalfPlaneViolation, "Re(zeta) must be negative");
  }

  double xi() const { return zeta.real(); }
  double eta() const { return zeta.imag(); }
};

/// Coordinate tangent vector dx d/dx + dy d/dy + dt d/dt.
struct Tangent {
  double dx = 0.0;
  double dy = 0.0;
  double dt = 0.0;
};

enum class GroupKind { heis, star };

/// Coefficients (a, b, c) of a tangent vector over {X, Y, T} (Heisenberg)
/// or the distinguished frame {X, Y, T} of the hyperbolic group.
struct FrameVector {
  GroupKind kind = GroupKind::star;
  HeisPoint base;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  bool horizontal() const { return c == 0.0; }
};

/// Element of SU(1,1) x U(1): the matrix [[a, ib], [ic, d]] with ad + bc = 1
/// together with the phase e^{i theta}.
struct SU11Element {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
  double theta = 0.0;

  SU11Element() = default;
  SU11Element(double a_, double b_, double c_, double d_, double theta_ = 0.0);

  double determinant() const { return a * d + b * c; }
};

inline SU11Element::SU11Element(double a_, double b_, double c_, double d_, double theta_)
    : a(a_), b(b_), c(c_), d(d_), theta(theta_) {
  if (std::abs(determinant() - 1.0) > 1e-12)
    fail(ErrorCode::DeterminantViolation, "ad + bc must equal 1");
}

}  // namespace hqc
