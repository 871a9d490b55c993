#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "hqc/contact.hpp"
#include "hqc/numerics.hpp"
#include "hqc/planar.hpp"

namespace hqc {

/// |Re^2 f - Re^2 zeta * J_f| / Re^2 zeta. LeftHalfPlaneViolation if f(zeta)
/// is not in the half-plane.
double symplectic_residual(const PlanarMap& f, cplx zeta);
double max_symplectic_residual(const PlanarMap& f, std::span<const cplx> zetas);

/// psi_zeta = i / (4 Re zeta) + (Im f)_zeta / (2 Re f).
cplx psi_gradient(const PlanarMap& f, cplx zeta);

/// |conj(g)_zeta - g_zetabar| with g = psi_gradient, by differences of g.
double closedness_residual(const PlanarMap& f, cplx zeta);

/// Quadrature tolerances used for potentials.
num::QuadratureOptions potential_quadrature();

/// Real potential of the exact 1-form g dzeta + conj(g) dzetabar, obtained
/// by integrating along the straight segment from the basepoint. Values are
/// memoized; copies share the cache and may be queried from many threads.
class Potential {
 public:
  using Gradient = std::function<cplx(cplx)>;

  Potential(Gradient g, cplx basepoint, double phase = 0.0, bool half_plane = true,
            num::QuadratureOptions opt = potential_quadrature());

  double operator()(cplx zeta) const;
  cplx gradient(cplx zeta) const { return g_(zeta); }

  /// Integral along the polyline basepoint -> waypoints... -> zeta, uncached.
  double along(std::span<const cplx> waypoints, cplx zeta) const;

  cplx basepoint() const { return base_; }
  double phase() const { return phase_; }

 private:
  double segment(cplx from, cplx to) const;

  struct Cache;
  Gradient g_;
  cplx base_;
  double phase_;
  bool half_plane_;
  num::QuadratureOptions opt_;
  std::shared_ptr<Cache> cache_;
};

/// Convenience wrapper: psi(zeta) with psi(zeta0) = 0.
double psi_potential(const PlanarMap& f, cplx zeta, cplx zeta0 = cplx{-1.0, 0.0});

struct LiftOptions {
  std::optional<cplx> basepoint;  // default -1 (half-plane) or 0 (plane)
  double phase = 0.0;
  double tol_analytic = 1e-7;
  double tol_fd = 1e-4;
  bool force = false;
  std::vector<cplx> gate;  // empty: the default working set
};

struct StarLift {
  StarMap map;
  Potential psi;
  double gate_residual = 0.0;
  bool forced = false;  // gate failed and was overridden
};

/// F(z,t) = (z J_f^{1/4}(zeta) e^{i psi(zeta)}, Im f(zeta)), zeta = -|z|^2 + it.
/// NotSymplectic if the gate fails and force is off; OrientationReversed
/// wherever J_f <= 1e-12. The map advertises chain-rule frame derivatives.
StarLift lift_star(const PlanarMap& f, const LiftOptions& opt = {});

/// phi with d phi = 2 Im(conj(z) dz - conj(f) df), phi(z0) = 0.
double phi_potential(const PlanarMap& f, cplx z, cplx z0 = cplx{});

struct HeisLift {
  StarMap map;
  Potential phi;
  double gate_residual = 0.0;
  bool forced = false;
};

/// F(z,t) = (f(z), t + phi(z)); the gate checks |J_f - 1|.
HeisLift lift_heis(const PlanarMap& f, const LiftOptions& opt = {});

/// Default gate points: Koranyi images of the standard grid (half-plane
/// maps) or the unit-box grid projected to C (plane maps).
std::vector<cplx> default_gate(PlanarDomain domain);

/// Serializable description of a lift; values are recomputed on load.
struct LiftDescriptor {
  GroupKind kind = GroupKind::star;
  nlohmann::json map_spec;
  cplx basepoint{-1.0, 0.0};
  double phase = 0.0;
  bool forced = false;
};

nlohmann::json to_json(const LiftDescriptor& d);
LiftDescriptor descriptor_from_json(const nlohmann::json& j);

}  // namespace hqc
