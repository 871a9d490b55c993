#pragma once

#include <functional>
#include <vector>

#include "hqc/numerics.hpp"
#include "hqc/point.hpp"

namespace hqc {

enum class CurveSpace { plane, half_plane, heis, star };

/// Value and parameter derivative of a curve at one parameter.
/// Plane curves leave t and dt at zero.
struct CurveSample {
  cplx z{};
  cplx dz{};
  double t = 0.0;
  double dt = 0.0;
};

using CurveEvaluator = std::function<CurveSample(double)>;

/// Sampled curve with an optional analytic evaluator. Without one,
/// derivatives come from five-node Lagrange stencils on the samples
/// (central in the interior, one-sided near the ends).
struct Curve {
  CurveSpace space = CurveSpace::plane;
  std::vector<double> s;
  std::vector<cplx> z;
  std::vector<double> t;  // empty for plane and half-plane curves
  CurveEvaluator evaluator;

  std::size_t size() const { return s.size(); }
  bool is_group() const { return space == CurveSpace::heis || space == CurveSpace::star; }
  double a() const { return s.front(); }
  double b() const { return s.back(); }
};

/// Checks the sample invariants; throws TooFewSamples, MalformedInput,
/// LeftHalfPlaneViolation or InvalidPoint.
void validate(const Curve& c);

Curve make_curve(CurveSpace space, std::vector<double> s, std::vector<cplx> z, std::vector<double> t = {});

/// n uniform samples of an analytic curve on [a, b]; the evaluator is kept.
Curve sample_curve(CurveSpace space, double a, double b, std::size_t n, CurveEvaluator eval);

CurveSample node_sample(const Curve& c, std::size_t k);
CurveSample curve_sample(const Curve& c, double s);

/// max |<gamma', T>| over the nodes: |t' + 2 Im(conj(z) z')| for the
/// Heisenberg group, the same divided by 2|z|^2 for the hyperbolic group.
double horizontality_defect(const Curve& c);

double horizontal_length_heis(const Curve& c, double tol = 1e-6);
double horizontal_length_star(const Curve& c, double tol = 1e-6);

/// Integral of |zeta'| / (-2 Re zeta).
double hyperbolic_length(const Curve& c);

Curve lift_plane_curve_heis(const Curve& plane, double t0);
Curve lift_hyperbolic_curve(const Curve& half_plane, double theta0);

/// Node-wise image of a hyperbolic-group curve under the Koranyi map. The
/// result carries samples only.
Curve koranyi_image(const Curve& star_curve);

/// Integral of f(sample(s)) over [a, b]: adaptive Gauss-Legendre per sample
/// interval when the curve is analytic, a single five-point pass otherwise.
double integrate_along(const Curve& c, const std::function<double(const CurveSample&)>& f,
                       const num::QuadratureOptions& opt = {});

struct HolonomyReport {
  double delta = 0.0;        // change of t (heis) or of arg z (star)
  double area_oracle = 0.0;  // Euclidean or hyperbolic area
  double area_check = 0.0;   // 2-D fan quadrature over the sample polygon
  double residual = 0.0;     // |delta + c * area_oracle|, c = 4 or 2
};

/// Lifts a closed, counterclockwise source curve (plane for heis, half-plane
/// for star) and compares the endpoint gap with the enclosed area.
HolonomyReport holonomy_closed(const Curve& source, GroupKind kind);

/// Area of the sample polygon weighted by w, by Gauss-Legendre on the
/// triangles of a fan from the node centroid.
double fan_area(const Curve& c, const std::function<double(cplx)>& w);

}  // namespace hqc
