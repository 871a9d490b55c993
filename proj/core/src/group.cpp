#include "hqc/group.hpp"

#include <cmath>

#include "hqc/frames.hpp"
#include "hqc/numerics.hpp"

namespace hqc {

HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q) {
  return {p.z + q.z, p.t + q.t + 2.0 * std::imag(std::conj(q.z) * p.z)};
}

HeisPoint heis_inv(const HeisPoint& p) { return {-p.z, -p.t}; }

StarPoint star_mul(const StarPoint& p, const StarPoint& q) {
  return {p.z * q.z, p.t + q.t * std::norm(p.z)};
}

StarPoint star_inv(const StarPoint& p) { return {1.0 / p.z, -p.t / std::norm(p.z)}; }

HypPoint koranyi_alpha(const StarPoint& p) { return HypPoint{cplx{-std::norm(p.z), p.t}}; }

double koranyi_gauge(const HeisPoint& p) {
  return std::sqrt(std::abs(cplx{-std::norm(p.z), p.t}));
}

double koranyi_cygan_dist(const HeisPoint& p, const HeisPoint& q) {
  return koranyi_gauge(heis_mul(heis_inv(p), q));
}

HeisPoint heis_translate(const HeisPoint& w, const HeisPoint& p) { return heis_mul(w, p); }

HeisPoint heis_rotate(double theta, const HeisPoint& p) {
  return {p.z * std::polar(1.0, theta), p.t};
}

HeisPoint heis_conjugate(const HeisPoint& p) { return {std::conj(p.z), -p.t}; }

HeisPoint heis_dilate(double delta, const HeisPoint& p) {
  if (!(delta > 0.0)) fail(ErrorCode::DomainViolation, "dilation factor must be positive");
  return {delta * p.z, delta * delta * p.t};
}

HeisPoint heis_invert(const HeisPoint& p) {
  const cplx zeta{-std::norm(p.z), p.t};
  if (std::abs(zeta) == 0.0) fail(ErrorCode::DomainViolation, "inversion is undefined at the origin");
  return {p.z / zeta, -p.t / std::norm(zeta)};
}

StarPoint star_translate(const StarPoint& w, const StarPoint& p) { return star_mul(w, p); }

Matrix3c matrix_model(const StarPoint& p) {
  const double r = std::abs(p.z);
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = r;
  m(0, 2) = cplx{0.0, p.t / r};
  m(1, 1) = p.z / r;
  m(2, 2) = 1.0 / r;
  return m;
}

Matrix3c hermitian_form_J() {
  Matrix3c j = Matrix3c::Zero();
  j(0, 2) = 1.0;
  j(1, 1) = 1.0;
  j(2, 0) = 1.0;
  return j;
}

Matrix3c su11_matrix(const SU11Element& g) {
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = g.a;
  m(0, 2) = cplx{0.0, g.b};
  m(1, 1) = std::polar(1.0, g.theta);
  m(2, 0) = cplx{0.0, g.c};
  m(2, 2) = g.d;
  return m;
}

nlohmann::json matrix_to_json(const Matrix3c& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.push_back({m(i, j).real(), m(i, j).imag()});
  return out;
}

Matrix3c matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 9) fail(ErrorCode::MalformedInput, "matrix must be 9 complex pairs");
  Matrix3c m;
  for (int k = 0; k < 9; ++k) {
    const auto& e = j[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::MalformedInput, "matrix entry must be [re, im]");
    m(k / 3, k % 3) = cplx{e[0].get<double>(), e[1].get<double>()};
  }
  return m;
}

SU11Element su11_compose(const SU11Element& g1, const SU11Element& g2) {
  SU11Element out;
  out.a = g1.a * g2.a - g1.b * g2.c;
  out.b = g1.a * g2.b + g1.b * g2.d;
  out.c = g1.c * g2.a + g1.d * g2.c;
  out.d = g1.d * g2.d - g1.c * g2.b;
  out.theta = g1.theta + g2.theta;
  return out;
}

namespace {

cplx su11_denominator(const SU11Element& g, cplx zeta) {
  const cplx den = cplx{0.0, g.c} * zeta + g.d;
  if (std::abs(den) < 1e-300) fail(ErrorCode::SingularDenominator, "ic zeta + d vanishes");
  return den;
}

}  // namespace

cplx su11_mobius(const SU11Element& g, cplx zeta) {
  const cplx den = su11_denominator(g, zeta);
  return (g.a * zeta + cplx{0.0, g.b}) / den;
}

StarPoint su11_action(const SU11Element& g, const StarPoint& p) {
  const cplx zeta{-std::norm(p.z), p.t};
  const cplx den = su11_denominator(g, zeta);
  const cplx w = p.z * std::polar(1.0, g.theta) / den;
  const double s = std::imag((g.a * zeta + cplx{0.0, g.b}) / den);
  return {w, s};
}

SiegelPoint siegel_embed(const HeisPoint& p) {
  return {cplx{-std::norm(p.z), p.t}, std::sqrt(2.0) * p.z};
}

double siegel_rho(const SiegelPoint& w) { return 2.0 * w.z1.real() + std::norm(w.z2); }

double siegel_eta(const SiegelPoint& w, cplx dz1, cplx dz2) {
  return dz1.imag() + std::imag(std::conj(w.z2) * dz2);
}

double siegel_eta_star(const SiegelPoint& w, cplx dz1, cplx dz2) {
  return siegel_eta(w, dz1, dz2) / std::norm(w.z2);
}

namespace {

std::pair<cplx, cplx> siegel_pushforward(const HeisPoint& p, const Tangent& v) {
  const double scale = std::hypot(std::abs(p.z), p.t);
  const double h = num::fd_step(scale);
  auto along = [&](double e) {
    return HeisPoint{p.z + e * cplx{v.dx, v.dy}, p.t + e * v.dt};
  };
  const cplx dz1 = num::central_diff([&](double e) { return siegel_embed(along(e)).z1; }, 0.0, h);
  const cplx dz2 = num::central_diff([&](double e) { return siegel_embed(along(e)).z2; }, 0.0, h);
  return {dz1, dz2};
}

}  // namespace

double siegel_pullback_residual(const StarPoint& p, const Tangent& v) {
  const auto [dz1, dz2] = siegel_pushforward(p, v);
  return std::abs(siegel_eta_star(siegel_embed(p), dz1, dz2) - eval_form(Form::omega_star, p, v));
}

double siegel_pullback_residual_heis(const HeisPoint& p, const Tangent& v) {
  const auto [dz1, dz2] = siegel_pushforward(p, v);
  return std::abs(siegel_eta(siegel_embed(p), dz1, dz2) - eval_form(Form::omega, p, v));
}

}  // namespace hqc
