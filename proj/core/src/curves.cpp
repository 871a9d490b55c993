#include "hqc/curves.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace hqc {

namespace {

constexpr std::size_t kStencil = 5;

std::size_t window_start(std::size_t n, std::size_t centre) {
  const std::size_t w = std::min(kStencil, n);
  const std::size_t half = w / 2;
  std::size_t lo = centre > half ? centre - half : 0;
  if (lo + w > n) lo = n - w;
  return lo;
}

// Lagrange interpolation of value and first derivative at s from the
// nearest nodes of the sampled curve.
CurveSample interpolate(const Curve& c, double s, std::size_t near) {
  const std::size_t n = c.size();
  const std::size_t lo = window_start(n, near);
  const std::size_t w = std::min(kStencil, n);
  const auto wts = num::fornberg_weights(s, std::span<const double>(c.s.data() + lo, w), 1);
  CurveSample out;
  const bool group = !c.t.empty();
  for (std::size_t j = 0; j < w; ++j) {
    out.z += wts[0][j] * c.z[lo + j];
    out.dz += wts[1][j] * c.z[lo + j];
    if (group) {
      out.t += wts[0][j] * c.t[lo + j];
      out.dt += wts[1][j] * c.t[lo + j];
    }
  }
  return out;
}

}  // namespace

void validate(const Curve& c) {
  if (c.s.size() < 3) fail(ErrorCode::TooFewSamples, "a curve needs at least 3 samples");
  if (c.z.size() != c.s.size()) fail(ErrorCode::MalformedInput, "curve arrays differ in length");
  if (c.is_group() && c.t.size() != c.s.size())
    fail(ErrorCode::MalformedInput, "group curve needs a t sample per node");
  if (!c.is_group() && !c.t.empty()) fail(ErrorCode::MalformedInput, "plane curve carries t samples");
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!std::isfinite(c.s[k]) || !std::isfinite(c.z[k].real()) || !std::isfinite(c.z[k].imag()))
      fail(ErrorCode::MalformedInput, "non-finite curve sample");
    if (c.is_group() && !std::isfinite(c.t[k])) fail(ErrorCode::MalformedInput, "non-finite curve sample");
    if (k > 0 && !(c.s[k] > c.s[k - 1])) fail(ErrorCode::MalformedInput, "parameters must increase strictly");
    if (c.space == CurveSpace::half_plane && !(c.z[k].real() < 0.0))
      fail(ErrorCode::LeftHalfPlaneViolation, "half-plane curve leaves Re < 0");
    if (c.space == CurveSpace::star && std::abs(c.z[k]) <= kMinStarModulus)
      fail(ErrorCode::InvalidPoint, "hyperbolic-group curve passes through z = 0");
  }
}

Curve make_curve(CurveSpace space, std::vector<double> s, std::vector<cplx> z, std::vector<double> t) {
  Curve c;
  c.space = space;
  c.s = std::move(s);
  c.z = std::move(z);
  c.t = std::move(t);
  validate(c);
  return c;
}

Curve sample_curve(CurveSpace space, double a, double b, std::size_t n, CurveEvaluator eval) {
  if (n < 3) fail(ErrorCode::TooFewSamples, "a curve needs at least 3 samples");
  Curve c;
  c.space = space;
  c.s.resize(n);
  c.z.resize(n);
  const bool group = space == CurveSpace::heis || space == CurveSpace::star;
  if (group) c.t.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = k + 1 == n ? b : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    const CurveSample v = eval(s);
    c.s[k] = s;
    c.z[k] = v.z;
    if (group) c.t[k] = v.t;
  }
  c.evaluator = std::move(eval);
  validate(c);
  return c;
}

CurveSample node_sample(const Curve& c, std::size_t k) {
  if (c.evaluator) return c.evaluator(c.s[k]);
  CurveSample out = interpolate(c, c.s[k], k);
  out.z = c.z[k];
  if (!c.t.empty()) out.t = c.t[k];
  return out;
}

CurveSample curve_sample(const Curve& c, double s) {
  if (c.evaluator) return c.evaluator(s);
  const auto it = std::lower_bound(c.s.begin(), c.s.end(), s);
  std::size_t near = static_cast<std::size_t>(it - c.s.begin());
  if (near >= c.size()) near = c.size() - 1;
  if (near > 0 && s - c.s[near - 1] < c.s[near] - s) --near;
  return interpolate(c, s, near);
}

double integrate_along(const Curve& c, const std::function<double(const CurveSample&)>& f,
                       const num::QuadratureOptions& opt) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const double lo = c.s[k];
    const double hi = c.s[k + 1];
    if (c.evaluator) {
      total += num::integrate([&](double s) { return f(c.evaluator(s)); }, lo, hi, opt);
    } else {
      const std::size_t near = k;
      total += num::GaussLegendre5::apply(
          [&](double s) { return f(interpolate(c, s, s - lo < hi - s ? near : near + 1)); }, lo, hi);
    }
  }
  return total;
}

namespace {

double heis_contact(const CurveSample& v) { return v.dt + 2.0 * std::imag(std::conj(v.z) * v.dz); }

void require_space(const Curve& c, CurveSpace space, const char* what) {
  if (c.space != space) fail(ErrorCode::MalformedInput, what);
}

}  // namespace

double horizontality_defect(const Curve& c) {
  if (c.size() < 3) fail(ErrorCode::TooFewSamples, "a curve needs at least 3 samples");
  if (!c.is_group()) fail(ErrorCode::MalformedInput, "horizontality needs a group curve");
  double worst = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const CurveSample v = node_sample(c, k);
    double d = std::abs(heis_contact(v));
    if (c.space == CurveSpace::star) d /= 2.0 * std::norm(v.z);
    worst = std::max(worst, d);
  }
  return worst;
}

double horizontal_length_heis(const Curve& c, double tol) {
  require_space(c, CurveSpace::heis, "expected a Heisenberg curve");
  if (horizontality_defect(c) > tol) fail(ErrorCode::NotHorizontal, "curve is not horizontal");
  return integrate_along(c, [](const CurveSample& v) { return std::abs(v.dz); });
}

double horizontal_length_star(const Curve& c, double tol) {
  require_space(c, CurveSpace::star, "expected a hyperbolic-group curve");
  if (horizontality_defect(c) > tol) fail(ErrorCode::NotHorizontal, "curve is not horizontal");
  return integrate_along(c, [](const CurveSample& v) { return std::abs(v.dz) / std::abs(v.z); });
}

double hyperbolic_length(const Curve& c) {
  require_space(c, CurveSpace::half_plane, "expected a half-plane curve");
  validate(c);
  return integrate_along(c, [](const CurveSample& v) {
    if (!(v.z.real() < 0.0)) fail(ErrorCode::LeftHalfPlaneViolation, "curve leaves the half-plane");
    return std::abs(v.dz) / (-2.0 * v.z.real());
  });
}

namespace {

// Cumulative integral of f along the curve, one value per node.
std::vector<double> cumulative(const Curve& c, double start, const std::function<double(const CurveSample&)>& f) {
  std::vector<double> acc(c.size());
  acc[0] = start;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const double lo = c.s[k];
    const double hi = c.s[k + 1];
    double v;
    if (c.evaluator) {
      v = num::integrate([&](double s) { return f(c.evaluator(s)); }, lo, hi);
    } else {
      v = num::GaussLegendre5::apply(
          [&](double s) { return f(interpolate(c, s, s - lo < hi - s ? k : k + 1)); }, lo, hi);
    }
    acc[k + 1] = acc[k] + v;
  }
  return acc;
}

std::size_t interval_of(const std::vector<double>& s, double x) {
  auto it = std::upper_bound(s.begin(), s.end(), x);
  std::size_t k = it == s.begin() ? 0 : static_cast<std::size_t>(it - s.begin()) - 1;
  return std::min(k, s.size() - 2);
}

}  // namespace

Curve lift_plane_curve_heis(const Curve& plane, double t0) {
  if (plane.space != CurveSpace::plane && plane.space != CurveSpace::half_plane)
    fail(ErrorCode::MalformedInput, "expected a plane curve");
  validate(plane);
  auto rate = [](const CurveSample& v) { return -2.0 * std::imag(std::conj(v.z) * v.dz); };
  Curve out;
  out.space = CurveSpace::heis;
  out.s = plane.s;
  out.z = plane.z;
  out.t = cumulative(plane, t0, rate);
  if (plane.evaluator) {
    auto src = std::make_shared<Curve>(plane);
    auto nodes_t = std::make_shared<std::vector<double>>(out.t);
    out.evaluator = [src, nodes_t, rate](double s) {
      const std::size_t k = interval_of(src->s, s);
      CurveSample v = src->evaluator(s);
      v.t = (*nodes_t)[k] + num::integrate([&](double u) { return rate(src->evaluator(u)); }, src->s[k], s);
      v.dt = rate(v);
      return v;
    };
  }
  return out;
}

Curve lift_hyperbolic_curve(const Curve& half_plane, double theta0) {
  if (half_plane.space != CurveSpace::half_plane) fail(ErrorCode::MalformedInput, "expected a half-plane curve");
  validate(half_plane);
  auto rate = [](const CurveSample& v) {
    if (!(v.z.real() < 0.0)) fail(ErrorCode::LeftHalfPlaneViolation, "curve leaves the half-plane");
    return v.dz.imag() / (2.0 * v.z.real());
  };
  const std::vector<double> theta = cumulative(half_plane, theta0, rate);
  auto assemble = [](const CurveSample& zeta, double th, double dth) {
    const double rho = std::sqrt(-zeta.z.real());
    const cplx phase = std::polar(1.0, th);
    CurveSample v;
    v.z = rho * phase;
    v.dz = phase * cplx{-zeta.dz.real() / (2.0 * rho), rho * dth};
    v.t = zeta.z.imag();
    v.dt = zeta.dz.imag();
    return v;
  };
  Curve out;
  out.space = CurveSpace::star;
  out.s = half_plane.s;
  out.z.resize(half_plane.size());
  out.t.resize(half_plane.size());
  for (std::size_t k = 0; k < half_plane.size(); ++k) {
    out.z[k] = std::sqrt(-half_plane.z[k].real()) * std::polar(1.0, theta[k]);
    out.t[k] = half_plane.z[k].imag();
  }
  if (half_plane.evaluator) {
    auto src = std::make_shared<Curve>(half_plane);
    auto nodes = std::make_shared<std::vector<double>>(theta);
    out.evaluator = [src, nodes, rate, assemble](double s) {
      const std::size_t k = interval_of(src->s, s);
      const CurveSample zeta = src->evaluator(s);
      const double th = (*nodes)[k] + num::integrate([&](double u) { return rate(src->evaluator(u)); }, src->s[k], s);
      return assemble(zeta, th, rate(zeta));
    };
  }
  return out;
}

Curve koranyi_image(const Curve& star_curve) {
  require_space(star_curve, CurveSpace::star, "expected a hyperbolic-group curve");
  validate(star_curve);
  std::vector<cplx> zeta(star_curve.size());
  for (std::size_t k = 0; k < star_curve.size(); ++k)
    zeta[k] = cplx{-std::norm(star_curve.z[k]), star_curve.t[k]};
  return make_curve(CurveSpace::half_plane, star_curve.s, std::move(zeta));
}

double fan_area(const Curve& c, const std::function<double(cplx)>& w) {
  cplx centre{};
  for (const cplx& p : c.z) centre += p;
  centre /= static_cast<double>(c.size());
  using GL = num::GaussLegendre5;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const cplx a = c.z[k] - centre;
    const cplx e = c.z[k + 1] - c.z[k];
    const double cross = std::imag(std::conj(a) * e);
    if (cross == 0.0) continue;
    double tri = 0.0;
    for (std::size_t i = 0; i < GL::nodes.size(); ++i) {
      const double u = 0.5 * (GL::nodes[i] + 1.0);
      for (std::size_t j = 0; j < GL::nodes.size(); ++j) {
        const double v = 0.5 * (GL::nodes[j] + 1.0);
        tri += 0.25 * GL::weights[i] * GL::weights[j] * u * w(centre + u * (a + v * e));
      }
    }
    total += tri * cross;
  }
  return total;
}

HolonomyReport holonomy_closed(const Curve& source, GroupKind kind) {
  validate(source);
  const cplx first = source.z.front();
  const cplx last = source.z.back();
  if (std::abs(last - first) > 1e-9 * (1.0 + std::abs(first)))
    fail(ErrorCode::NotClosed, "curve endpoints differ");
  const bool degenerate =
      std::all_of(source.z.begin(), source.z.end(), [&](const cplx& p) { return p == first; });
  if (degenerate) return {};

  HolonomyReport rep;
  if (kind == GroupKind::heis) {
    const Curve lift = lift_plane_curve_heis(source, 0.0);
    rep.delta = lift.t.back() - lift.t.front();
    rep.area_oracle = integrate_along(source, [](const CurveSample& v) { return v.z.real() * v.dz.imag(); });
    rep.area_check = fan_area(source, [](cplx) { return 1.0; });
    rep.residual = std::abs(rep.delta + 4.0 * rep.area_oracle);
  } else {
    if (source.space != CurveSpace::half_plane) fail(ErrorCode::MalformedInput, "expected a half-plane curve");
    // the lifted angle, accumulated without wrapping
    const std::vector<double> theta = cumulative(source, 0.0, [](const CurveSample& v) {
      return v.dz.imag() / (2.0 * v.z.real());
    });
    rep.delta = theta.back() - theta.front();
    rep.area_oracle = integrate_along(source, [](const CurveSample& v) {
      const double xi = v.z.real();
      return -v.z.imag() * v.dz.real() / (4.0 * xi * xi);
    });
    rep.area_check = fan_area(source, [](cplx p) { return 1.0 / (4.0 * p.real() * p.real()); });
    rep.residual = std::abs(rep.delta + 2.0 * rep.area_oracle);
  }
  return rep;
}

}  // namespace hqc
