#pragma once

#include <string>

#include "classa/curve.hpp"

namespace classa {

// Control points plus uniformly sampled (t, x, y, kappa) rows.  Header line
// is "t,x,y,kappa"; numbers carry 17 significant digits; LF line endings.
std::string render_csv(const CurveSpec& spec, int samples = 1001);

// Standalone 800x400 SVG: curve with control polygon on the left half,
// curvature against t on the right half.  Byte-deterministic for fixed input.
std::string render_svg(const CurveSpec& spec, int samples = 1001);

} // namespace classa
