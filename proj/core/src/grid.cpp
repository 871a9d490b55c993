#include "hqc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace hqc {

GridSpec standard_grid_spec() { return GridSpec{}; }

std::vector<HeisPoint> standard_grid() { return polar_grid(standard_grid_spec()); }

std::vector<HeisPoint> polar_grid(const GridSpec& spec) {
  if (spec.angles < 1) fail(ErrorCode::DomainViolation, "grid needs at least one angle");
  std::vector<HeisPoint> out;
  out.reserve(spec.radii.size() * static_cast<std::size_t>(spec.angles) * spec.ts.size());
  for (double r : spec.radii) {
    if (!(r >= spec.min_modulus)) fail(ErrorCode::DomainViolation, "grid radius below the minimum modulus");
    for (int k = 0; k < spec.angles; ++k) {
      const double a = 2.0 * std::numbers::pi * k / spec.angles;
      for (double t : spec.ts) out.emplace_back(std::polar(r, a), t);
    }
  }
  return out;
}

GridSpec log_radial_spec(double rmin, double rmax, int nr, int angles, double tmin, double tmax, int nt) {
  if (nr < 1 || nt < 1 || angles < 1 || !(rmin > 0.0) || !(rmax >= rmin))
    fail(ErrorCode::DomainViolation, "bad grid ranges");
  GridSpec g;
  g.radii.clear();
  g.ts.clear();
  for (int i = 0; i < nr; ++i) {
    const double u = nr == 1 ? 0.0 : static_cast<double>(i) / (nr - 1);
    g.radii.push_back(std::exp(std::log(rmin) + u * (std::log(rmax) - std::log(rmin))));
  }
  for (int i = 0; i < nt; ++i) {
    const double u = nt == 1 ? 0.5 : static_cast<double>(i) / (nt - 1);
    g.ts.push_back(tmin + u * (tmax - tmin));
  }
  g.angles = angles;
  return g;
}

std::vector<HeisPoint> unit_box_grid(int n, double min_modulus) {
  std::vector<HeisPoint> out;
  auto coord = [n](int i) { return n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx z{coord(i), coord(j)};
      if (std::abs(z) < min_modulus) continue;
      for (int k = 0; k < n; ++k) out.emplace_back(z, coord(k));
    }
  return out;
}

std::vector<HeisPoint> random_points(std::size_t n, std::uint64_t seed, double rmin, double rmax, double tmax) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logr(std::log(rmin), std::log(rmax));
  std::uniform_real_distribution<double> arg(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> tt(-tmax, tmax);
  std::vector<HeisPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double r = std::exp(logr(rng));
    const double a = arg(rng);
    out.emplace_back(std::polar(r, a), tt(rng));
  }
  return out;
}

std::vector<cplx> koranyi_images(std::span<const HeisPoint> pts) {
  std::vector<cplx> out;
  for (const HeisPoint& p : pts) {
    const cplx zeta{-std::norm(p.z), p.t};
    const auto same = [&](const cplx& w) { return std::abs(w - zeta) <= 1e-12 * (1.0 + std::abs(zeta)); };
    if (std::none_of(out.begin(), out.end(), same)) out.push_back(zeta);
  }
  return out;
}

GridSpec grid_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "standard") return standard_grid_spec();
    fail(ErrorCode::MalformedInput, "unknown grid name");
  }
  if (!j.is_object()) fail(ErrorCode::MalformedInput, "grid must be \"standard\" or an object");
  try {
    GridSpec g;
    if (j.contains("rmin")) {
      g = log_radial_spec(j.at("rmin").get<double>(), j.at("rmax").get<double>(), j.value("nr", 5),
                          j.value("angles", 16), j.value("tmin", -2.0), j.value("tmax", 2.0), j.value("nt", 5));
    } else {
      if (j.contains("r")) g.radii = j.at("r").get<std::vector<double>>();
      if (j.contains("t")) g.ts = j.at("t").get<std::vector<double>>();
      g.angles = j.value("angles", g.angles);
    }
    g.min_modulus = j.value("min_modulus", g.min_modulus);
    (void)polar_grid(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
}

nlohmann::json to_json(const GridSpec& g) {
  return {{"r", g.radii}, {"angles", g.angles}, {"t", g.ts}, {"min_modulus", g.min_modulus}};
}

}  // namespace hqc
