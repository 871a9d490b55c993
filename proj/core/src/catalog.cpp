#include "hqc/catalog.hpp"

#include <cmath>
#include <numbers>

#include "hqc/group.hpp"
#include "hqc/numerics.hpp"

namespace hqc {

double arg_half_plane(cplx zeta) {
  const double a = std::atan2(zeta.imag(), zeta.real());
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

namespace {

constexpr double kPi = std::numbers::pi;

HeisPoint coords(const HeisPoint& p) { return p; }

cplx zeta_of(const HeisPoint& p) { return {-std::norm(p.z), p.t}; }

// z J^{1/4} e^{i psi}, Im f: the lift written with a given potential.
StarMap lift_with(const PlanarMap& f, std::function<double(cplx)> jac, std::function<double(cplx)> psi) {
  StarMap m;
  m.kind = GroupKind::star;
  m.f_I = [jac, psi](const HeisPoint& p) {
    const cplx zeta = zeta_of(p);
    return p.z * std::pow(jac(zeta), 0.25) * std::polar(1.0, psi(zeta));
  };
  m.f_3 = [f](const HeisPoint& p) { return f(zeta_of(p)).imag(); };
  return m;
}

}  // namespace

CatalogEntry make_identity() {
  CatalogEntry e;
  e.name = "identity";
  e.spec = {{"name", "identity"}};
  PlanarMap f;
  f.domain = PlanarDomain::L;
  f.eval = [](cplx z) { return z; };
  f.derivs = [](cplx) { return Wirtinger{1.0, 0.0}; };
  e.planar = f;
  e.closed_form_psi = [](cplx) { return 0.0; };
  StarMap id;
  id.f_I = [](const HeisPoint& p) { return p.z; };
  id.f_3 = [](const HeisPoint& p) { return p.t; };
  e.closed_form_lift = id;
  e.expected_mu = [](cplx) { return cplx{}; };
  return e;
}

CatalogEntry make_su11(double a, double b, double c, double d, double theta) {
  if (std::abs(a * d + b * c - 1.0) > 1e-10) fail(ErrorCode::DeterminantViolation, "ad + bc must equal 1");
  // normalise to ad + bc = 1 exactly
  const double s = std::sqrt(a * d + b * c);
  const SU11Element g(a / s, b / s, c / s, d / s, theta);
  CatalogEntry e;
  e.name = "su11";
  e.spec = {{"name", "su11"}, {"a", a}, {"b", b}, {"c", c}, {"d", d}, {"theta", theta}};
  PlanarMap f;
  f.domain = PlanarDomain::L;
  f.eval = [g](cplx z) { return su11_mobius(g, z); };
  f.derivs = [g](cplx z) {
    const cplx den = cplx{0.0, g.c} * z + g.d;
    return Wirtinger{1.0 / (den * den), 0.0};
  };
  e.planar = f;
  if (g.c == 0.0) {
    e.closed_form_psi = [](cplx) { return 0.0; };
  } else {
    const double pole = g.d / g.c;
    // continuous branch of arctan(xi / (eta - d/c)) on the half-plane
    e.closed_form_psi = [pole](cplx z) { return std::atan2(z.real(), z.imag() - pole); };
  }
  StarMap lift;
  lift.f_I = [g](const HeisPoint& p) { return su11_action(g, StarPoint(p)).z; };
  lift.f_3 = [g](const HeisPoint& p) { return su11_action(g, StarPoint(p)).t; };
  e.closed_form_lift = lift;
  e.expected_mu = [](cplx) { return cplx{}; };
  return e;
}

CatalogEntry make_twist(const TwistProfile& profile, double c, nlohmann::json spec) {
  CatalogEntry e;
  e.name = "twist";
  e.spec = spec.is_null() ? nlohmann::json{{"name", "twist"}, {"c", c}} : std::move(spec);
  const auto g = profile.g;
  const auto dg = profile.dg;
  PlanarMap f;
  f.domain = PlanarDomain::L;
  f.eval = [g](cplx z) { return z * std::exp(g(arg_half_plane(z))); };
  f.derivs = [g, dg](cplx z) {
    const double th = arg_half_plane(z);
    const cplx fz = z * std::exp(g(th));
    const double k = dg(th);
    return Wirtinger{(2.0 * I + k) * fz / (2.0 * I * z), -k * fz / (2.0 * I * std::conj(z))};
  };
  e.planar = f;

  std::function<double(double)> psi_theta = profile.psi;
  if (!psi_theta) {
    psi_theta = [dg](double th) {
      return num::integrate([&](double s) { return 0.5 * dg(s) * std::tan(s); }, kPi, th);
    };
  }
  e.closed_form_psi = [psi_theta, c](cplx z) { return c + psi_theta(arg_half_plane(z)); };
  e.expected_mu = [dg](cplx z) {
    const double k = dg(arg_half_plane(z));
    return -k / (k + 2.0 * I) * (z / std::conj(z));
  };
  StarMap lift;
  lift.f_I = [g, psi_theta, c](const HeisPoint& p) {
    const double th = arg_half_plane(zeta_of(p));
    return p.z * std::exp(0.5 * g(th)) * std::polar(1.0, c + psi_theta(th));
  };
  lift.f_3 = [g](const HeisPoint& p) { return p.t * std::exp(g(arg_half_plane(zeta_of(p)))); };
  e.closed_form_lift = lift;
  return e;
}

CatalogEntry make_twist(double k, double c) {
  TwistProfile p;
  p.g = [k](double th) { return k * th; };
  p.dg = [k](double) { return k; };
  p.psi = [k](double th) { return -0.5 * k * std::log(-std::cos(th)); };
  return make_twist(p, c, {{"name", "twist"}, {"k", k}, {"c", c}});
}

CatalogEntry make_spiral_stretch(double k, double kp, double c) {
  if (!(k >= 0.0)) fail(ErrorCode::DomainViolation, "spiral-stretch needs k >= 0");
  CatalogEntry e;
  e.name = "spiral";
  e.spec = {{"name", "spiral"}, {"k", k}, {"kp", kp}, {"c", c}};
  const double k1 = k + 1.0;
  auto Theta = [k1, kp](double th) {
    const double x = k1 * std::cos(th);
    const double y = std::sin(th) + kp * k1 * std::cos(th);
    return kPi + std::atan(y / x);
  };
  auto dTheta = [k1, kp](double th) {
    const double cs = std::cos(th);
    const double y = std::sin(th) + kp * k1 * cs;
    return k1 / (k1 * k1 * cs * cs + y * y);
  };
  PlanarMap f;
  f.domain = PlanarDomain::L;
  f.eval = [Theta, k1](cplx z) { return std::polar(std::pow(std::abs(z), k1), Theta(arg_half_plane(z))); };
  f.derivs = [Theta, dTheta, k, k1](cplx z) {
    const double th = arg_half_plane(z);
    const cplx fz = std::polar(std::pow(std::abs(z), k1), Theta(th));
    const double gp = dTheta(th) - 1.0;
    return Wirtinger{(2.0 + k + gp) * fz / (2.0 * z), (k - gp) * fz / (2.0 * std::conj(z))};
  };
  e.planar = f;
  auto psi = [Theta, kp, k1, c](cplx z) {
    const double th = arg_half_plane(z);
    return 0.5 * kp * k1 * std::log(std::abs(z)) + 0.5 * (Theta(th) - th) + c;
  };
  e.closed_form_psi = psi;
  e.expected_mu = [dTheta, k](cplx z) {
    const double gp = dTheta(arg_half_plane(z)) - 1.0;
    return (k - gp) / (2.0 + k + gp) * (z / std::conj(z));
  };
  auto jac = [dTheta, k, k1](cplx z) { return k1 * dTheta(arg_half_plane(z)) * std::pow(std::abs(z), 2.0 * k); };
  e.closed_form_lift = lift_with(f, jac, psi);
  return e;
}

CatalogEntry make_plain_stretch(double k) {
  CatalogEntry e;
  e.name = "plainstretch";
  e.spec = {{"name", "plainstretch"}, {"k", k}};
  PlanarMap f;
  f.domain = PlanarDomain::L;
  f.eval = [k](cplx z) { return z * std::pow(std::abs(z), k); };
  f.derivs = [k](cplx z) {
    const double r = std::pow(std::abs(z), k);
    return Wirtinger{(1.0 + 0.5 * k) * r, 0.5 * k * r * z / std::conj(z)};
  };
  e.planar = f;
  e.expected_mu = [k](cplx z) { return k / (2.0 + k) * z / std::conj(z); };
  return e;
}

CatalogEntry make_affine(cplx a, cplx b, cplx c) {
  CatalogEntry e;
  e.name = "affine";
  e.kind = GroupKind::heis;
  e.spec = {{"name", "affine"},
            {"a", {a.real(), a.imag()}},
            {"b", {b.real(), b.imag()}},
            {"c", {c.real(), c.imag()}}};
  PlanarMap f;
  f.domain = PlanarDomain::C;
  f.eval = [a, b, c](cplx z) { return a * z + b * std::conj(z) + c; };
  f.derivs = [a, b](cplx) { return Wirtinger{a, b}; };
  e.planar = f;
  e.expected_mu = [a, b](cplx) { return b / a; };
  return e;
}

CatalogEntry make_heis_isometry(const HeisIsometrySpec& spec) {
  CatalogEntry e;
  e.name = "heis_isometry";
  e.kind = GroupKind::heis;
  switch (spec.kind) {
    case HeisIsometryKind::translation: {
      const HeisPoint w{spec.w, spec.s};
      e.heis_map = [w](const HeisPoint& p) { return heis_translate(w, p); };
      e.spec = {{"name", "heis_isometry"}, {"type", "translation"}, {"w", {spec.w.real(), spec.w.imag()}}, {"s", spec.s}};
      break;
    }
    case HeisIsometryKind::rotation: {
      const double th = spec.theta;
      e.heis_map = [th](const HeisPoint& p) { return heis_rotate(th, p); };
      e.spec = {{"name", "heis_isometry"}, {"type", "rotation"}, {"theta", th}};
      break;
    }
    case HeisIsometryKind::conjugation:
      e.heis_map = [](const HeisPoint& p) { return heis_conjugate(p); };
      e.spec = {{"name", "heis_isometry"}, {"type", "conjugation"}};
      break;
    case HeisIsometryKind::dilation: {
      const double delta = spec.delta;
      if (!(delta > 0.0)) fail(ErrorCode::DomainViolation, "dilation factor must be positive");
      e.heis_map = [delta](const HeisPoint& p) { return heis_dilate(delta, p); };
      e.spec = {{"name", "heis_isometry"}, {"type", "dilation"}, {"delta", delta}};
      break;
    }
    case HeisIsometryKind::inversion:
      e.heis_map = [](const HeisPoint& p) { return heis_invert(p); };
      e.spec = {{"name", "heis_isometry"}, {"type", "inversion"}};
      break;
  }
  StarMap m;
  m.kind = GroupKind::heis;
  auto map = e.heis_map;
  m.f_I = [map](const HeisPoint& p) { return map(coords(p)).z; };
  m.f_3 = [map](const HeisPoint& p) { return map(coords(p)).t; };
  e.closed_form_lift = m;
  return e;
}

namespace {

double num_param(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(ErrorCode::MalformedInput, std::string("parameter '") + key + "' must be a number");
  return j[key].get<double>();
}

cplx cplx_param(const nlohmann::json& j, const char* key, cplx fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j[key];
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(ErrorCode::MalformedInput, std::string("parameter '") + key + "' must be a number or [re, im]");
}

}  // namespace

CatalogEntry catalog_lookup(const nlohmann::json& spec) {
  nlohmann::json j = spec.is_string() ? nlohmann::json{{"name", spec.get<std::string>()}} : spec;
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
    fail(ErrorCode::MalformedInput, "map spec needs a \"name\"");
  const std::string name = j["name"].get<std::string>();
  if (name == "identity") return make_identity();
  if (name == "su11")
    return make_su11(num_param(j, "a", 1.0), num_param(j, "b", 0.0), num_param(j, "c", 0.0),
                     num_param(j, "d", 1.0), num_param(j, "theta", 0.0));
  if (name == "twist") return make_twist(num_param(j, "k", 1.0), num_param(j, "c", 0.0));
  if (name == "spiral")
    return make_spiral_stretch(num_param(j, "k", 0.0), num_param(j, "kp", 0.0), num_param(j, "c", 0.0));
  if (name == "plainstretch") return make_plain_stretch(num_param(j, "k", 1.0));
  if (name == "affine")
    return make_affine(cplx_param(j, "a", 1.0), cplx_param(j, "b", 0.0), cplx_param(j, "c", 0.0));
  if (name == "heis_isometry") {
    HeisIsometrySpec s;
    const std::string type = j.value("type", "translation");
    if (type == "translation") s.kind = HeisIsometryKind::translation;
    else if (type == "rotation") s.kind = HeisIsometryKind::rotation;
    else if (type == "conjugation") s.kind = HeisIsometryKind::conjugation;
    else if (type == "dilation") s.kind = HeisIsometryKind::dilation;
    else if (type == "inversion") s.kind = HeisIsometryKind::inversion;
    else fail(ErrorCode::MalformedInput, "unknown isometry type '" + type + "'");
    s.w = cplx_param(j, "w", 0.0);
    s.s = num_param(j, "s", 0.0);
    s.theta = num_param(j, "theta", 0.0);
    s.delta = num_param(j, "delta", 1.0);
    return make_heis_isometry(s);
  }
  fail(ErrorCode::MalformedInput, "unknown map '" + name + "'");
}

nlohmann::json catalog_list() {
  using nlohmann::json;
  return json::array({
      {{"name", "identity"}, {"params", json::object()}, {"domain", "L"},
       {"description", "identity of the left half-plane"}},
      {{"name", "su11"}, {"params", {{"a", 1.0}, {"b", 0.0}, {"c", 0.0}, {"d", 1.0}, {"theta", 0.0}}},
       {"domain", "L"}, {"description", "(a zeta + ib)/(ic zeta + d), ad + bc = 1, with U(1) phase theta"}},
      {{"name", "twist"}, {"params", {{"k", 1.0}, {"c", 0.0}}}, {"domain", "L"},
       {"description", "zeta exp(k arg zeta)"}},
      {{"name", "spiral"}, {"params", {{"k", 0.0}, {"kp", 0.0}, {"c", 0.0}}}, {"domain", "L"},
       {"description", "|zeta|^(k+1) exp(i(pi + atan(tan(arg zeta)/(k+1) + kp)))"}},
      {{"name", "plainstretch"}, {"params", {{"k", 1.0}}}, {"domain", "L"},
       {"description", "zeta |zeta|^k, not symplectic"}},
      {{"name", "affine"}, {"params", {{"a", {1.0, 0.0}}, {"b", {0.0, 0.0}}, {"c", {0.0, 0.0}}}}, {"domain", "C"},
       {"description", "a z + b conj(z) + c"}},
      {{"name", "heis_isometry"},
       {"params", {{"type", "translation"}, {"w", {0.0, 0.0}}, {"s", 0.0}, {"theta", 0.0}, {"delta", 1.0}}},
       {"domain", "H"},
       {"description", "translation, rotation, conjugation, dilation or inversion of the Heisenberg group"}},
  });
}

StarMap entry_map(const CatalogEntry& e, const LiftOptions& opt) {
  if (e.heis_map) return *e.closed_form_lift;
  if (!e.planar) fail(ErrorCode::MalformedInput, "entry has no map");
  if (e.planar->domain == PlanarDomain::L) return lift_star(*e.planar, opt).map;
  return lift_heis(*e.planar, opt).map;
}

StarMap lift_from_descriptor(const LiftDescriptor& d) {
  const CatalogEntry e = catalog_lookup(d.map_spec);
  LiftOptions opt;
  opt.basepoint = d.basepoint;
  opt.phase = d.phase;
  opt.force = d.forced;
  const StarMap m = entry_map(e, opt);
  if (m.kind != d.kind) fail(ErrorCode::MalformedInput, "descriptor kind does not match the map");
  return m;
}

}  // namespace hqc
