#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hqc/contact.hpp"
#include "hqc/lifting.hpp"
#include "hqc/planar.hpp"

namespace hqc {

/// arg zeta on the left half-plane, in (pi/2, 3pi/2).
double arg_half_plane(cplx zeta);

struct CatalogEntry {
  std::string name;
  nlohmann::json spec;  // {"name": ..., params...}; enough to rebuild the entry
  GroupKind kind = GroupKind::star;
  std::optional<PlanarMap> planar;
  std::function<double(cplx)> closed_form_psi;  // up to an additive constant
  std::optional<StarMap> closed_form_lift;      // up to a constant U(1) phase in f_I
  std::function<cplx(cplx)> expected_mu;
  std::function<HeisPoint(const HeisPoint&)> heis_map;  // Heisenberg isometries only
};

CatalogEntry make_identity();

/// f(zeta) = (a zeta + ib) / (ic zeta + d). DeterminantViolation if
/// |ad + bc - 1| > 1e-10.
CatalogEntry make_su11(double a, double b, double c, double d, double theta = 0.0);

/// Angular profile g of a twist map with its derivative. `psi`, if set, is
/// an antiderivative of (g'/2) tan theta vanishing at theta = pi.
struct TwistProfile {
  std::function<double(double)> g;
  std::function<double(double)> dg;
  std::function<double(double)> psi;
};

/// f(zeta) = zeta e^{g(theta)}.
CatalogEntry make_twist(const TwistProfile& profile, double c = 0.0, nlohmann::json spec = {});

/// Linear profile g(theta) = k theta.
CatalogEntry make_twist(double k, double c = 0.0);

/// f(zeta) = |zeta|^{k+1} e^{i Theta}, Theta = pi + atan(tan(theta)/(k+1) + k').
CatalogEntry make_spiral_stretch(double k, double kp, double c = 0.0);

/// f(zeta) = zeta |zeta|^k; not symplectic for k != 0.
CatalogEntry make_plain_stretch(double k = 1.0);

/// f(z) = a z + b conj(z) + c on the plane.
CatalogEntry make_affine(cplx a, cplx b, cplx c);

enum class HeisIsometryKind { translation, rotation, conjugation, dilation, inversion };

struct HeisIsometrySpec {
  HeisIsometryKind kind = HeisIsometryKind::translation;
  cplx w{};
  double s = 0.0;
  double theta = 0.0;
  double delta = 1.0;
};

CatalogEntry make_heis_isometry(const HeisIsometrySpec& spec);

/// Builds an entry from {"name": ..., params} or a bare name string.
/// MalformedInput for unknown names or bad parameters.
CatalogEntry catalog_lookup(const nlohmann::json& spec);

/// One record per family: name, parameters with defaults, description.
nlohmann::json catalog_list();

/// The map whose contact behaviour the entry describes: the numeric lift for
/// planar entries, the isometry itself for Heisenberg isometries.
StarMap entry_map(const CatalogEntry& e, const LiftOptions& opt = {});

/// Rebuilds a lifted map from its descriptor.
StarMap lift_from_descriptor(const LiftDescriptor& d);

}  // namespace hqc
