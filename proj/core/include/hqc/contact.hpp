#pragma once

#include <functional>
#include <optional>
#include <span>

#include <Eigen/Core>

#include "hqc/point.hpp"

namespace hqc {

/// Frame derivatives of F = (f_I, f_3) at a point, in the frame {Z, Zbar, T}
/// of the group named by `frame`. The log derivatives are Zf_I / f_I etc.
struct FrameDerivatives {
  GroupKind frame = GroupKind::star;
  cplx f{};
  double f3 = 0.0;
  cplx Zf{}, Zbf{}, Tf{};
  cplx Zf3{}, Zbf3{}, Tf3{};
  cplx ZLog{}, ZbLog{}, TLog{};
  bool exact_logs = false;  // logs supplied by the producer; otherwise derived
};

/// A map F = (f_I, f_3) of the hyperbolic group (kind star) or of the
/// Heisenberg group (kind heis), evaluated on raw coordinates.
struct StarMap {
  GroupKind kind = GroupKind::star;
  std::function<cplx(const HeisPoint&)> f_I;
  std::function<double(const HeisPoint&)> f_3;
  // optional; must report derivatives in the frame of `kind`
  std::function<FrameDerivatives(const HeisPoint&)> analytic;

  HeisPoint operator()(const HeisPoint& p) const { return {f_I(p), f_3(p)}; }
};

enum class DerivativeMode { automatic, finite_difference };

/// Frame derivatives of F at p. Analytic derivatives are used in automatic
/// mode when the map has them and the requested frame matches its kind.
/// ZeroImage if |f_I(p)| < 1e-150.
FrameDerivatives frame_derivatives(const StarMap& F, const HeisPoint& p,
                                   DerivativeMode mode = DerivativeMode::automatic,
                                   std::optional<GroupKind> frame = std::nullopt);

/// Values of the pulled-back contact form on the frame. For the hyperbolic
/// group F^*omega* = d arg f_I + df_3 / (2|f_I|^2), for the Heisenberg group
/// F^*omega = df_3 + 2 Im(conj(f_I) df_I).
struct ContactResiduals {
  cplx R1{};
  cplx R2{};
  double R3 = 0.0;
  double lambda = 0.0;  // |ZLog f_I|^2 - |ZbarLog f_I|^2, or |Zf_I|^2 - |Zbar f_I|^2
};

ContactResiduals contact_residuals(const FrameDerivatives& d);
ContactResiduals contact_residuals(const StarMap& F, const HeisPoint& p,
                                   DerivativeMode mode = DerivativeMode::automatic);

/// lambda* (or lambda); OrientationReversed if not positive.
double lambda_star(const StarMap& F, const HeisPoint& p, DerivativeMode mode = DerivativeMode::automatic);

struct Distortion {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double K = 1.0;
};

/// DegenerateMap if lambda2 <= 0.
Distortion distortion(const FrameDerivatives& d);
Distortion distortion(const StarMap& F, const HeisPoint& p, DerivativeMode mode = DerivativeMode::automatic);

/// mu_F = Zbar f_I / Z f_I; DegenerateMap if Z f_I vanishes.
cplx beltrami(const FrameDerivatives& d);
cplx beltrami(const StarMap& F, const HeisPoint& p, DerivativeMode mode = DerivativeMode::automatic);

/// Zbar f_II / Z f_II with f_II = -|f_I|^2 + i f_3.
cplx beltrami_fII(const FrameDerivatives& d);

/// T f_II.
cplx T_fII(const FrameDerivatives& d);

/// Coordinate Jacobian of (Re f_I, Im f_I, f_3) in (x, y, t) by fourth-order
/// differences of the values.
Eigen::Matrix3d coordinate_jacobian(const StarMap& F, const HeisPoint& p);

/// Jacobian with respect to the invariant volume: the coordinate determinant
/// for the Heisenberg group, times |z|^4 / |f_I|^4 for the hyperbolic group.
double jacobian_determinant(const StarMap& F, const HeisPoint& p);

/// max over the coordinate basis of |theta(F_* e) - lambda theta(e)|, with
/// F_* from coordinate_jacobian and theta the group's contact form.
double pullback_residual(const StarMap& F, const HeisPoint& p, double lambda);

struct ContactReport {
  HeisPoint point;
  cplx R1{};
  cplx R2{};
  double R3_minus_lambda = 0.0;
  double lambda_star = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double K = 1.0;
  cplx mu{};
  double jacobian = 0.0;           // J_F
  double jacobian_residual = 0.0;  // |J_F - lambda^2| / lambda^2
};

/// Full report; raises DegenerateMap where lambda2 <= 0.
ContactReport contact_report(const StarMap& F, const HeisPoint& p,
                             DerivativeMode mode = DerivativeMode::automatic);

struct CirclesCheck {
  double max_T_fII = 0.0;
  double lambda_stdev = 0.0;
  bool preserving = false;
};

CirclesCheck circles_preserving_check(const StarMap& F, std::span<const HeisPoint> grid, double tol = 1e-7,
                                      DerivativeMode mode = DerivativeMode::automatic);

/// Frame derivatives of the identity of either group, exact.
FrameDerivatives identity_derivatives(GroupKind kind, const HeisPoint& p);

}  // namespace hqc
