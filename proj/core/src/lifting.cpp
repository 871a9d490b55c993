#include "hqc/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "hqc/grid.hpp"

namespace hqc {

double symplectic_residual(const PlanarMap& f, cplx zeta) {
  const HypPoint z{zeta};
  const cplx w = f(z.zeta);
  if (!(w.real() < 0.0)) fail(ErrorCode::LeftHalfPlaneViolation, "f(zeta) is not in the half-plane");
  const double re2 = z.xi() * z.xi();
  return std::abs(w.real() * w.real() - re2 * f.jacobian(zeta)) / re2;
}

double max_symplectic_residual(const PlanarMap& f, std::span<const cplx> zetas) {
  double worst = 0.0;
  for (const cplx& z : zetas) worst = std::max(worst, symplectic_residual(f, z));
  return worst;
}

cplx psi_gradient(const PlanarMap& f, cplx zeta) {
  const double xi = zeta.real();
  if (!(xi < 0.0)) fail(ErrorCode::LeftHalfPlaneViolation, "zeta must lie in the half-plane");
  const cplx w = f(zeta);
  const Wirtinger d = f.wirtinger(zeta);
  const cplx im_z = (d.dz - std::conj(d.dzbar)) / (2.0 * I);
  return I / (4.0 * xi) + im_z / (2.0 * w.real());
}

double closedness_residual(const PlanarMap& f, cplx zeta) {
  const double h = num::fd_step(std::abs(zeta)) * std::min(1.0, -zeta.real());
  const cplx gx = num::central_diff([&](double s) { return psi_gradient(f, zeta + s); }, 0.0, h);
  const cplx gy = num::central_diff([&](double s) { return psi_gradient(f, zeta + cplx{0.0, s}); }, 0.0, h);
  const cplx g_zbar = 0.5 * (gx + I * gy);
  const cplx conj_g_z = 0.5 * (std::conj(gx) - I * std::conj(gy));
  return std::abs(conj_g_z - g_zbar);
}

num::QuadratureOptions potential_quadrature() {
  num::QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-13;
  opt.max_depth = 24;
  return opt;
}

struct Potential::Cache {
  mutable std::shared_mutex mutex;
  std::map<std::pair<double, double>, double> values;
};

Potential::Potential(Gradient g, cplx basepoint, double phase, bool half_plane, num::QuadratureOptions opt)
    : g_(std::move(g)), base_(basepoint), phase_(phase), half_plane_(half_plane), opt_(opt),
      cache_(std::make_shared<Cache>()) {
  if (half_plane_) (void)HypPoint(base_);
}

double Potential::segment(cplx from, cplx to) const {
  const cplx delta = to - from;
  if (delta == cplx{}) return 0.0;
  return num::integrate([&](double s) { return 2.0 * std::real(g_(from + s * delta) * delta); }, 0.0, 1.0, opt_);
}

double Potential::operator()(cplx zeta) const {
  if (half_plane_) (void)HypPoint(zeta);
  const std::pair<double, double> key{zeta.real(), zeta.imag()};
  {
    std::shared_lock lock(cache_->mutex);
    const auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  const double v = phase_ + segment(base_, zeta);
  std::unique_lock lock(cache_->mutex);
  return cache_->values.emplace(key, v).first->second;
}

double Potential::along(std::span<const cplx> waypoints, cplx zeta) const {
  double acc = phase_;
  cplx from = base_;
  for (const cplx& w : waypoints) {
    if (half_plane_) (void)HypPoint(w);
    acc += segment(from, w);
    from = w;
  }
  return acc + segment(from, zeta);
}

double psi_potential(const PlanarMap& f, cplx zeta, cplx zeta0) {
  const Potential psi([f](cplx z) { return psi_gradient(f, z); }, zeta0);
  return psi(zeta);
}

std::vector<cplx> default_gate(PlanarDomain domain) {
  if (domain == PlanarDomain::L) {
    const auto grid = standard_grid();
    return koranyi_images(grid);
  }
  std::vector<cplx> out;
  for (const HeisPoint& p : unit_box_grid(9, 0.0))
    if (std::find(out.begin(), out.end(), p.z) == out.end()) out.push_back(p.z);
  return out;
}

namespace {

double checked_jacobian(const PlanarMap& f, cplx zeta) {
  const double j = f.jacobian(zeta);
  if (!(j > 1e-12)) fail(ErrorCode::OrientationReversed, "J_f <= 1e-12");
  return j;
}

double gate_tolerance(const PlanarMap& f, const LiftOptions& opt) {
  return f.source() == DerivativeSource::analytic ? opt.tol_analytic : opt.tol_fd;
}

}  // namespace

StarLift lift_star(const PlanarMap& f, const LiftOptions& opt) {
  if (f.domain != PlanarDomain::L) fail(ErrorCode::DomainViolation, "lift_star needs a half-plane map");
  const std::vector<cplx> gate = opt.gate.empty() ? default_gate(PlanarDomain::L) : opt.gate;
  for (const cplx& z : gate) (void)checked_jacobian(f, z);
  const double residual = max_symplectic_residual(f, gate);
  const bool ok = residual < gate_tolerance(f, opt);
  if (!ok && !opt.force) fail(ErrorCode::NotSymplectic, "map fails the symplectic gate");

  const Potential psi([f](cplx z) { return psi_gradient(f, z); }, opt.basepoint.value_or(cplx{-1.0, 0.0}), opt.phase);
  StarLift out{StarMap{}, psi, residual, !ok};
  out.map.kind = GroupKind::star;
  out.map.f_I = [f, psi](const HeisPoint& p) {
    const cplx zeta{-std::norm(p.z), p.t};
    return p.z * std::pow(checked_jacobian(f, zeta), 0.25) * std::polar(1.0, psi(zeta));
  };
  out.map.f_3 = [f](const HeisPoint& p) { return f(cplx{-std::norm(p.z), p.t}).imag(); };
  out.map.analytic = [f, psi](const HeisPoint& p) {
    const cplx zeta{-std::norm(p.z), p.t};
    const double xi = zeta.real();
    const Wirtinger w = f.wirtinger(zeta);
    const double J = checked_jacobian(f, zeta);
    const double h = num::fd_step(std::abs(zeta)) * std::min(1.0, -xi);
    const double Jx = num::central_diff([&](double s) { return f.jacobian(zeta + s); }, 0.0, h);
    const double Jy = num::central_diff([&](double s) { return f.jacobian(zeta + cplx{0.0, s}); }, 0.0, h);
    const cplx J_z = 0.5 * cplx{Jx, -Jy};
    const cplx g = psi.gradient(zeta);
    const cplx Lz = 0.25 * J_z / J + I * g;
    const cplx Lzb = 0.25 * std::conj(J_z) / J + I * std::conj(g);

    FrameDerivatives d;
    d.frame = GroupKind::star;
    d.f = p.z * std::pow(J, 0.25) * std::polar(1.0, psi(zeta));
    d.f3 = f(zeta).imag();
    d.Zf = d.f * (1.0 + 2.0 * xi * Lz);
    d.Zbf = d.f * (2.0 * xi * Lzb);
    d.Tf = I * d.f;
    const cplx v_z = (w.dz - std::conj(w.dzbar)) / (2.0 * I);
    d.Zf3 = 2.0 * xi * v_z;
    d.Zbf3 = std::conj(d.Zf3);
    d.Tf3 = 0.0;
    return d;
  };
  return out;
}

namespace {

// phi_z for d phi = 2 Im(conj(z) dz - conj(f) df).
cplx phi_gradient(const PlanarMap& f, cplx z) {
  const cplx w = f(z);
  const Wirtinger d = f.wirtinger(z);
  const cplx A = std::conj(z) - std::conj(w) * d.dz;
  const cplx B = -std::conj(w) * d.dzbar;
  return -I * (A - std::conj(B));
}

}  // namespace

double phi_potential(const PlanarMap& f, cplx z, cplx z0) {
  const double tol = f.source() == DerivativeSource::analytic ? 1e-7 : 1e-4;
  for (const cplx& q : {z0, z})
    if (std::abs(f.jacobian(q) - 1.0) > tol) fail(ErrorCode::NotSymplectic, "J_f differs from 1");
  const Potential phi([f](cplx q) { return phi_gradient(f, q); }, z0, 0.0, false);
  return phi(z);
}

HeisLift lift_heis(const PlanarMap& f, const LiftOptions& opt) {
  if (f.domain != PlanarDomain::C) fail(ErrorCode::DomainViolation, "lift_heis needs a plane map");
  const std::vector<cplx> gate = opt.gate.empty() ? default_gate(PlanarDomain::C) : opt.gate;
  double residual = 0.0;
  for (const cplx& z : gate) residual = std::max(residual, std::abs(f.jacobian(z) - 1.0));
  const bool ok = residual < gate_tolerance(f, opt);
  if (!ok && !opt.force) fail(ErrorCode::NotSymplectic, "map is not area preserving");

  const Potential phi([f](cplx q) { return phi_gradient(f, q); }, opt.basepoint.value_or(cplx{}), opt.phase,
                      false);
  HeisLift out{StarMap{}, phi, residual, !ok};
  out.map.kind = GroupKind::heis;
  out.map.f_I = [f](const HeisPoint& p) { return f(p.z); };
  out.map.f_3 = [phi](const HeisPoint& p) { return p.t + phi(p.z); };
  out.map.analytic = [f, phi](const HeisPoint& p) {
    const Wirtinger w = f.wirtinger(p.z);
    const cplx pz = phi.gradient(p.z);
    FrameDerivatives d;
    d.frame = GroupKind::heis;
    d.f = f(p.z);
    d.f3 = p.t + phi(p.z);
    d.Zf = w.dz;
    d.Zbf = w.dzbar;
    d.Tf = 0.0;
    d.Zf3 = pz + I * std::conj(p.z);
    d.Zbf3 = std::conj(pz) - I * p.z;
    d.Tf3 = 1.0;
    return d;
  };
  return out;
}

nlohmann::json to_json(const LiftDescriptor& d) {
  return {{"kind", d.kind == GroupKind::star ? "star" : "heis"},
          {"map", d.map_spec},
          {"basepoint", {d.basepoint.real(), d.basepoint.imag()}},
          {"phase", d.phase},
          {"forced", d.forced}};
}

LiftDescriptor descriptor_from_json(const nlohmann::json& j) {
  try {
    LiftDescriptor d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "star" && kind != "heis") fail(ErrorCode::MalformedInput, "lift kind must be star or heis");
    d.kind = kind == "star" ? GroupKind::star : GroupKind::heis;
    d.map_spec = j.at("map");
    const auto& b = j.at("basepoint");
    d.basepoint = cplx{b.at(0).get<double>(), b.at(1).get<double>()};
    d.phase = j.value("phase", 0.0);
    d.forced = j.value("forced", false);
    return d;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
}

}  // namespace hqc
