#pragma once

#include <functional>

#include "hqc/point.hpp"

namespace hqc {

/// Domain of a planar map: the left half-plane or the whole plane.
enum class PlanarDomain { L, C };

enum class DerivativeSource { analytic, finite_difference };

/// Wirtinger derivatives (f_zeta, f_zetabar).
struct Wirtinger {
  cplx dz{};
  cplx dzbar{};
};

struct PlanarMap {
  PlanarDomain domain = PlanarDomain::L;
  std::function<cplx(cplx)> eval;
  std::function<Wirtinger(cplx)> derivs;  // empty: finite differences

  DerivativeSource source() const {
    return derivs ? DerivativeSource::analytic : DerivativeSource::finite_difference;
  }

  cplx operator()(cplx zeta) const;
  Wirtinger wirtinger(cplx zeta) const;

  /// J_f = |f_zeta|^2 - |f_zetabar|^2.
  double jacobian(cplx zeta) const;

  /// mu_f = f_zetabar / f_zeta.
  cplx beltrami(cplx zeta) const;
};

/// Fourth-order central differences in Re and Im, combined as
/// f_zeta = (f_x - i f_y)/2 and f_zetabar = (f_x + i f_y)/2.
Wirtinger fd_wirtinger(const std::function<cplx(cplx)>& f, cplx zeta);

/// Copy of f that ignores any analytic derivatives.
PlanarMap without_derivatives(PlanarMap f);

/// f o g, with the chain rule applied to whatever derivatives f and g carry.
PlanarMap compose(const PlanarMap& f, const PlanarMap& g);

}  // namespace hqc
