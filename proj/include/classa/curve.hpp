#pragma once

#include <utility>
#include <vector>

#include "classa/geometry.hpp"

namespace classa {

// Generative description of a planar Bezier curve: the control-polygon edges
// are w, M w, M^2 w, ... starting from the base point.
struct CurveSpec {
  int degree = 3;
  Mat2 generator{};
  Vec2 seed{};
  Vec2 base{};
};

using ControlPolygon = std::vector<Vec2>;

struct CurveSample {
  double t = 0.0;
  Vec2 point{};
  Vec2 d1{};
  Vec2 d2{};
  double kappa = 0.0;
};

ControlPolygon generate_polygon(const CurveSpec& spec);

// de Casteljau point evaluation; exact at the endpoints.
Vec2 evaluate(const ControlPolygon& polygon, double t);

// First and second derivatives from the hodograph polygons (exact polynomial
// differentiation, no step-size anywhere).
std::pair<Vec2, Vec2> derivatives(const ControlPolygon& polygon, double t);

// Signed curvature det(c', c'') / ||c'||^3.
double curvature_numeric(const ControlPolygon& polygon, double t);

CurveSample sample_curve(const ControlPolygon& polygon, double t);

std::pair<double, double> endpoint_curvatures(const CurveSpec& spec);

// Spec for the arc [0, t]: generator (1-t)I + tM, seed t*w.
CurveSpec subdivide_left(const CurveSpec& spec, double t);

// Spec for the arc [t, 1]: generator M T^{-1}, seed and base taken from the
// right de Casteljau polygon.
CurveSpec subdivide_right(const CurveSpec& spec, double t);

// Largest edge norm; the scale all relative tolerances refer to.
double polygon_scale(const ControlPolygon& polygon);

} // namespace classa
