#include "classa/curve.hpp"

#include <cmath>
#include <tuple>

#include "classa/error.hpp"
#include "classa/spectral.hpp"

namespace classa {

namespace {

void check_spec(const CurveSpec& spec) {
  if (spec.degree < 2) fail(Errc::BadArgument, "curve spec: degree must be at least 2");
  if (spec.seed.norm() == 0.0) fail(Errc::ZeroSeed, "curve spec: zero seed vector");
}

Vec2 de_casteljau(std::vector<Vec2> pts, double t) {
  for (size_t k = pts.size() - 1; k > 0; --k)
    for (size_t j = 0; j < k; ++j) pts[j] = pts[j] * (1.0 - t) + pts[j + 1] * t;
  return pts[0];
}

} // namespace

ControlPolygon generate_polygon(const CurveSpec& spec) {
  check_spec(spec);
  ControlPolygon pts;
  pts.reserve(static_cast<size_t>(spec.degree) + 1);
  Vec2 point = spec.base;
  Vec2 edge = spec.seed;
  pts.push_back(point);
  for (int j = 0; j < spec.degree; ++j) {
    point = point + edge;
    pts.push_back(point);
    edge = spec.generator * edge;
  }
  return pts;
}

Vec2 evaluate(const ControlPolygon& polygon, double t) {
  if (polygon.empty()) fail(Errc::BadArgument, "evaluate: empty polygon");
  if (t == 0.0) return polygon.front();
  if (t == 1.0) return polygon.back();
  return de_casteljau(polygon, t);
}

std::pair<Vec2, Vec2> derivatives(const ControlPolygon& polygon, double t) {
  const size_t n = polygon.size() - 1;
  if (n < 2) fail(Errc::BadArgument, "derivatives: need degree >= 2");

  std::vector<Vec2> d1(n);
  for (size_t j = 0; j < n; ++j) d1[j] = (polygon[j + 1] - polygon[j]) * static_cast<double>(n);
  std::vector<Vec2> d2(n - 1);
  for (size_t j = 0; j + 1 < n; ++j) d2[j] = (d1[j + 1] - d1[j]) * static_cast<double>(n - 1);

  return {de_casteljau(std::move(d1), t), de_casteljau(std::move(d2), t)};
}

double polygon_scale(const ControlPolygon& polygon) {
  double s = 0.0;
  for (size_t j = 0; j + 1 < polygon.size(); ++j)
    s = std::max(s, (polygon[j + 1] - polygon[j]).norm());
  return s;
}

double curvature_numeric(const ControlPolygon& polygon, double t) {
  const auto [d1, d2] = derivatives(polygon, t);
  const double speed = d1.norm();
  if (speed <= 1e-14 * polygon_scale(polygon))
    fail(Errc::VanishingSpeed, "curvature_numeric: vanishing first derivative");
  return det(d1, d2) / (speed * speed * speed);
}

CurveSample sample_curve(const ControlPolygon& polygon, double t) {
  CurveSample s;
  s.t = t;
  s.point = evaluate(polygon, t);
  std::tie(s.d1, s.d2) = derivatives(polygon, t);
  const double speed = s.d1.norm();
  s.kappa = (speed > 1e-14 * polygon_scale(polygon))
                ? det(s.d1, s.d2) / (speed * speed * speed)
                : 0.0;
  return s;
}

std::pair<double, double> endpoint_curvatures(const CurveSpec& spec) {
  check_spec(spec);
  const int n = spec.degree;
  const double factor = static_cast<double>(n - 1) / n;

  const Vec2 w = spec.seed;
  const Vec2 mw = spec.generator * w;
  const double nw = w.norm();

  Vec2 last = w; // M^{n-2} w
  for (int j = 0; j < n - 2; ++j) last = spec.generator * last;
  const Vec2 final_edge = spec.generator * last; // M^{n-1} w
  const double nf = final_edge.norm();

  // Flag only genuine cancellation in the last product, not legitimately
  // small magnitudes of contracting generators.
  const double end_scale = spec.generator.max_abs() * last.norm();
  if (nf <= 1e-14 * std::max(end_scale, 1e-300))
    fail(Errc::VanishingSpeed, "endpoint_curvatures: vanishing endpoint velocity");

  const double k0 = factor * det(w, mw) / (nw * nw * nw);
  const double k1 = factor * det(last, final_edge) / (nf * nf * nf);
  return {k0, k1};
}

CurveSpec subdivide_left(const CurveSpec& spec, double t) {
  check_spec(spec);
  if (t <= 0.0 || t > 1.0) fail(Errc::BadArgument, "subdivide_left: t outside (0, 1]");
  CurveSpec left = spec;
  left.generator = subdivision_matrix(spec.generator, t);
  left.seed = spec.seed * t;
  return left;
}

CurveSpec subdivide_right(const CurveSpec& spec, double t) {
  check_spec(spec);
  if (t < 0.0 || t >= 1.0) fail(Errc::BadArgument, "subdivide_right: t outside [0, 1)");

  // Seed and base are read off the trailing de Casteljau polygon rather than
  // assumed from a formula; the polygon-equality tests pin the construction.
  ControlPolygon pts = generate_polygon(spec);
  const size_t n = pts.size() - 1;
  std::vector<Vec2> right(n + 1);
  right[n] = pts[n];
  for (size_t s = 1; s <= n; ++s) {
    for (size_t j = 0; j + s <= n; ++j) pts[j] = pts[j] * (1.0 - t) + pts[j + 1] * t;
    right[n - s] = pts[n - s];
  }

  CurveSpec rs;
  rs.degree = spec.degree;
  rs.generator = right_quotient_matrix(spec.generator, t);
  rs.base = right[0];
  rs.seed = right[1] - right[0];
  return rs;
}

} // namespace classa
