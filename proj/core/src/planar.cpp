#include "hqc/planar.hpp"

#include "hqc/numerics.hpp"

namespace hqc {

cplx PlanarMap::operator()(cplx zeta) const {
  if (domain == PlanarDomain::L && !(zeta.real() < 0.0))
    fail(ErrorCode::LeftHalfPlaneViolation, "planar map queried outside the half-plane");
  return eval(zeta);
}

Wirtinger PlanarMap::wirtinger(cplx zeta) const {
  if (domain == PlanarDomain::L && !(zeta.real() < 0.0))
    fail(ErrorCode::LeftHalfPlaneViolation, "planar map queried outside the half-plane");
  return derivs ? derivs(zeta) : fd_wirtinger(eval, zeta);
}

double PlanarMap::jacobian(cplx zeta) const {
  const Wirtinger w = wirtinger(zeta);
  return std::norm(w.dz) - std::norm(w.dzbar);
}

cplx PlanarMap::beltrami(cplx zeta) const {
  const Wirtinger w = wirtinger(zeta);
  if (std::abs(w.dz) < 1e-300) fail(ErrorCode::DegenerateMap, "f_zeta vanishes");
  return w.dzbar / w.dz;
}

Wirtinger fd_wirtinger(const std::function<cplx(cplx)>& f, cplx zeta) {
  const double h = num::fd_step(std::abs(zeta));
  const cplx fx = num::central_diff([&](double s) { return f(zeta + s); }, 0.0, h);
  const cplx fy = num::central_diff([&](double s) { return f(zeta + cplx{0.0, s}); }, 0.0, h);
  return {0.5 * (fx - I * fy), 0.5 * (fx + I * fy)};
}

PlanarMap without_derivatives(PlanarMap f) {
  f.derivs = nullptr;
  return f;
}

PlanarMap compose(const PlanarMap& f, const PlanarMap& g) {
  PlanarMap out;
  out.domain = g.domain;
  out.eval = [f, g](cplx zeta) { return f(g(zeta)); };
  if (f.derivs && g.derivs) {
    out.derivs = [f, g](cplx zeta) {
      const Wirtinger dg = g.wirtinger(zeta);
      const Wirtinger df = f.wirtinger(g(zeta));
      return Wirtinger{df.dz * dg.dz + df.dzbar * std::conj(dg.dzbar),
                       df.dz * dg.dzbar + df.dzbar * std::conj(dg.dz)};
    };
  }
  return out;
}

}  // namespace hqc
