#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "hqc/point.hpp"

namespace hqc {

/// Polar sample grid: every radius |z| x `angles` equally spaced arguments
/// x every t.
struct GridSpec {
  std::vector<double> radii{0.25, 0.5, 1.0, 2.0, 4.0};
  int angles = 16;
  std::vector<double> ts{-2.0, -1.0, 0.0, 1.0, 2.0};
  double min_modulus = 0.05;
};

/// r in {0.25, 0.5, 1, 2, 4}, 16 angles, t in {-2, -1, 0, 1, 2}.
GridSpec standard_grid_spec();
std::vector<HeisPoint> standard_grid();

/// DomainViolation if a radius falls below spec.min_modulus.
std::vector<HeisPoint> polar_grid(const GridSpec& spec);

/// nr log-spaced radii in [rmin, rmax] and nt values of t in [tmin, tmax].
GridSpec log_radial_spec(double rmin, double rmax, int nr, int angles, double tmin, double tmax, int nt);

/// n x n x n lattice on [-1, 1]^3 without the points with |z| < min_modulus.
std::vector<HeisPoint> unit_box_grid(int n = 9, double min_modulus = 0.05);

/// Uniform in log|z| over [rmin, rmax], in arg z and in t over [-tmax, tmax].
std::vector<HeisPoint> random_points(std::size_t n, std::uint64_t seed, double rmin = 0.25, double rmax = 4.0,
                                     double tmax = 2.0);

/// Koranyi images -|z|^2 + it in first-seen order, merging images that
/// agree to 1e-12 relative.
std::vector<cplx> koranyi_images(std::span<const HeisPoint> pts);

/// "standard", or an object {"r": [...], "angles": n, "t": [...]} or
/// {"rmin", "rmax", "nr", "angles", "tmin", "tmax", "nt"}; optional "min_modulus".
GridSpec grid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GridSpec& g);

}  // namespace hqc
