#include "classa/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "classa/curvature_model.hpp"
#include "classa/error.hpp"

namespace classa {

namespace {

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Sampled {
  std::vector<double> ts;
  std::vector<Vec2> points;
  std::vector<double> kappas;
};

Sampled sample_all(const CurveSpec& spec, int samples) {
  if (samples < 2) fail(Errc::BadArgument, "render: need at least 2 samples");
  const auto model = build_model(spec);
  const auto polygon = generate_polygon(spec);

  Sampled s;
  s.ts.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    s.ts.push_back(t);
    s.points.push_back(evaluate(polygon, t));
    s.kappas.push_back(model.degenerate ? 0.0 : kappa_closed(model, t));
  }
  return s;
}

} // namespace

std::string render_csv(const CurveSpec& spec, int samples) {
  const auto polygon = generate_polygon(spec);
  const auto s = sample_all(spec, samples);

  std::string out;
  for (size_t j = 0; j < polygon.size(); ++j)
    out += "# control-point " + std::to_string(j) + " " + num17(polygon[j].x) + " " +
           num17(polygon[j].y) + "\n";
  out += "t,x,y,kappa\n";
  for (size_t i = 0; i < s.ts.size(); ++i)
    out += num17(s.ts[i]) + "," + num17(s.points[i].x) + "," + num17(s.points[i].y) + "," +
           num17(s.kappas[i]) + "\n";
  return out;
}

std::string render_svg(const CurveSpec& spec, int samples) {
  const auto polygon = generate_polygon(spec);
  const auto s = sample_all(spec, samples);

  // Left pane: the curve and its control polygon, auto-fitted with a 5% margin.
  double xmin = polygon[0].x, xmax = polygon[0].x;
  double ymin = polygon[0].y, ymax = polygon[0].y;
  const auto grow = [&](Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (Vec2 p : polygon) grow(p);
  for (Vec2 p : s.points) grow(p);
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double cx = (xmin + xmax) / 2.0, cy = (ymin + ymax) / 2.0;
  const double pane = 400.0, margin = 0.05 * pane;
  const double scale = (pane - 2.0 * margin) / span;
  const auto map_curve = [&](Vec2 p) -> Vec2 {
    // y runs upward in curve coordinates, downward in SVG.
    return {pane / 2.0 + (p.x - cx) * scale, pane / 2.0 - (p.y - cy) * scale};
  };

  // Right pane: curvature graph over t in [0, 1].
  const double gx0 = 440.0, gx1 = 780.0, gy0 = 360.0, gy1 = 40.0;
  double kmin = *std::min_element(s.kappas.begin(), s.kappas.end());
  double kmax = *std::max_element(s.kappas.begin(), s.kappas.end());
  if (kmax - kmin < 1e-12) {
    kmin -= 1.0;
    kmax += 1.0;
  }
  const double pad = 0.05 * (kmax - kmin);
  kmin -= pad;
  kmax += pad;
  const auto map_graph = [&](double t, double k) -> Vec2 {
    return {gx0 + t * (gx1 - gx0), gy0 + (k - kmin) / (kmax - kmin) * (gy1 - gy0)};
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
         "viewBox=\"0 0 800 400\">\n";
  out += "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";

  out += "<polyline fill=\"none\" stroke=\"#b0b0b0\" stroke-width=\"1\" points=\"";
  for (size_t j = 0; j < polygon.size(); ++j) {
    const Vec2 p = map_curve(polygon[j]);
    out += (j ? " " : "") + px(p.x) + "," + px(p.y);
  }
  out += "\"/>\n";
  for (Vec2 q : polygon) {
    const Vec2 p = map_curve(q);
    out += "<circle cx=\"" + px(p.x) + "\" cy=\"" + px(p.y) +
           "\" r=\"3\" fill=\"#707070\"/>\n";
  }

  out += "<path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" d=\"";
  for (size_t i = 0; i < s.points.size(); ++i) {
    const Vec2 p = map_curve(s.points[i]);
    out += (i == 0 ? "M" : " L") + px(p.x) + "," + px(p.y);
  }
  out += "\"/>\n";

  // Graph frame and zero line.
  out += "<rect x=\"" + px(gx0) + "\" y=\"" + px(gy1) + "\" width=\"" + px(gx1 - gx0) +
         "\" height=\"" + px(gy0 - gy1) +
         "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
  if (kmin < 0.0 && kmax > 0.0) {
    const double zy = map_graph(0.0, 0.0).y;
    out += "<line x1=\"" + px(gx0) + "\" y1=\"" + px(zy) + "\" x2=\"" + px(gx1) + "\" y2=\"" +
           px(zy) + "\" stroke=\"#c0c0c0\" stroke-width=\"1\"/>\n";
  }
  out += "<polyline fill=\"none\" stroke=\"#9c1f1f\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < s.ts.size(); ++i) {
    const Vec2 p = map_graph(s.ts[i], s.kappas[i]);
    out += (i ? " " : "") + px(p.x) + "," + px(p.y);
  }
  out += "\"/>\n";
  out += "</svg>\n";
  return out;
}

} // namespace classa
