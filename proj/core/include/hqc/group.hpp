#pragma once

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "hqc/point.hpp"

namespace hqc {

// Heisenberg group: (z,t)*(z',t') = (z+z', t+t'+2 Im(conj(z') z)).
HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q);
HeisPoint heis_inv(const HeisPoint& p);

// Hyperbolic Heisenberg group: (z,t)*(w,s) = (zw, t + s|z|^2).
StarPoint star_mul(const StarPoint& p, const StarPoint& q);
StarPoint star_inv(const StarPoint& p);

/// Koranyi map (z,t) -> -|z|^2 + it onto the left half-plane.
HypPoint koranyi_alpha(const StarPoint& p);

/// Gauge |(z,t)| = |-|z|^2 + it|^{1/2}.
double koranyi_gauge(const HeisPoint& p);

/// Koranyi-Cygan distance |p^{-1} * q|.
double koranyi_cygan_dist(const HeisPoint& p, const HeisPoint& q);

// Isometries and similarities of the Heisenberg group.
HeisPoint heis_translate(const HeisPoint& w, const HeisPoint& p);
HeisPoint heis_rotate(double theta, const HeisPoint& p);
HeisPoint heis_conjugate(const HeisPoint& p);
HeisPoint heis_dilate(double delta, const HeisPoint& p);
/// Koranyi inversion; DomainViolation at the origin.
HeisPoint heis_invert(const HeisPoint& p);

/// Left translation of the hyperbolic group: (w,s)*(z,t).
StarPoint star_translate(const StarPoint& w, const StarPoint& p);

using Matrix3c = Eigen::Matrix3cd;

/// Matrix model M(z,t) of the hyperbolic Heisenberg group inside PU(2,1).
/// e^{i arg z} is formed as z/|z|.
Matrix3c matrix_model(const StarPoint& p);

/// Anti-diagonal Hermitian form preserved by matrix_model.
Matrix3c hermitian_form_J();

/// Image of (g, e^{i theta}) under SU(1,1) x U(1) -> PU(2,1).
Matrix3c su11_matrix(const SU11Element& g);

/// Row-major list of nine [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix3c& m);
Matrix3c matrix_from_json(const nlohmann::json& j);

SU11Element su11_compose(const SU11Element& g1, const SU11Element& g2);

/// (z,t) -> (z e^{i theta} / (ic zeta + d), Im((a zeta + ib)/(ic zeta + d))),
/// zeta = -|z|^2 + it. SingularDenominator if |ic zeta + d| < 1e-300.
StarPoint su11_action(const SU11Element& g, const StarPoint& p);

/// Mobius action of the SU(1,1) factor on the left half-plane.
cplx su11_mobius(const SU11Element& g, cplx zeta);

/// Siegel boundary embedding (z,t) -> (-|z|^2 + it, sqrt(2) z).
struct SiegelPoint {
  cplx z1;
  cplx z2;
};
SiegelPoint siegel_embed(const HeisPoint& p);

/// Defining function rho(z1,z2) = 2 Re(z1) + |z2|^2.
double siegel_rho(const SiegelPoint& w);

/// Contact form of the truncated boundary, Im(d rho / |z2|^2), evaluated
/// on a tangent (dz1, dz2) at w.
double siegel_eta_star(const SiegelPoint& w, cplx dz1, cplx dz2);

/// Contact form Im(d rho) = dy1 + Im(conj(z2) dz2) of the full boundary.
double siegel_eta(const SiegelPoint& w, cplx dz1, cplx dz2);

/// |(Psi^* eta*)(v) - omega*(v)| with the pushforward of v taken by
/// fourth-order differences of the embedding.
double siegel_pullback_residual(const StarPoint& p, const Tangent& v);

/// Same check for the Heisenberg group: |(Psi^* eta)(v) - omega(v)|.
double siegel_pullback_residual_heis(const HeisPoint& p, const Tangent& v);

}  // namespace hqc
