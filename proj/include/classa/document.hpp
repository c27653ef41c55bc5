#pragma once

#include <string>
#include <string_view>

#include "classa/curve.hpp"

namespace classa {

// Curve description in the line-oriented key = value exchange format.
// Exactly one of the two forms is present:
//   raw:   matrix (4 reals, row-major), seed, degree, optional base
//   eigen: h, phi, optional gamma (default pi/2), seed, degree
// Numbers are decimals or exact fractions p/q; '#' starts a comment.
struct SpecDocument {
  enum class Form { Raw, Eigen };
  Form form = Form::Raw;
  int degree = 3;
  Vec2 seed{};
  Vec2 base{};
  Mat2 matrix{};     // raw form
  double h = 0.0;    // eigen form
  double phi = 0.0;
  double gamma = 0.0;
};

SpecDocument parse_document(std::string_view text);
SpecDocument load_document(const std::string& path);
std::string print_document(const SpecDocument& doc);

CurveSpec to_curve_spec(const SpecDocument& doc);

// Matrix with eigenvalue pair h e^{+-i|phi|} whose eigenvector has real and
// imaginary parts of equal length separated by the angle gamma.
Mat2 matrix_from_eigen_form(double h, double phi, double gamma);

} // namespace classa
