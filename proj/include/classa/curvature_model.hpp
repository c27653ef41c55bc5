#pragma once

#include <complex>

#include "classa/curve.hpp"
#include "classa/spectral.hpp"

namespace classa {

// Closed-form curvature evaluator built from the eigenstructure of the
// generator.  kappa(t) = kappa(0) * (sigma1(t) sigma2(t))^{n-2} ||w||^3 /
// ||T^{n-1} w||^3, with T = (1-t) I + t M, and the product of the two
// subdivision eigenvalues equal to det T in every spectral case.
struct CurvatureModel {
  CurveSpec spec{};
  SpectralData spectral{};
  SeedCoordinates coords{};
  double kappa0 = 0.0;
  bool degenerate = false; // seed is an eigenvector (or M scalar): the curve is a line
};

// Pieces of the curvature derivative in the complex-pair case.
struct ComplexDerivativeTerms {
  double drift = 0.0;                  // (h cos phi - 1)(1-t) + t (h^2 - h cos phi)
  std::complex<double> phase{1.0, 0.0}; // z(t) = e^{i theta} e^{i 2(n-1) phi(t)}, unit modulus
  double theta = 0.0;                  // argument of mu^2
  double phi_t = 0.0;                  // argument of sigma(t)
  double mod_sigma_t = 0.0;            // |sigma(t)|
};

CurvatureModel build_model(const CurveSpec& spec);

double kappa_closed(const CurvatureModel& model, double t);

// Analytic derivative of the curvature, split by spectral variant.
double dkappa(const CurvatureModel& model, double t);

ComplexDerivativeTerms complex_terms(const CurvatureModel& model, double t);

} // namespace classa
