#pragma once

#include <string>
#include <vector>

#include "classa/curvature_model.hpp"

namespace classa {

enum class CertificateKind {
  CaoWang,          // symmetric generator, sigma1 >= 1 and 2 sigma2 >= sigma1 + 1
  PositiveRealSeed, // sigma1 + sigma2 >= 2 and |mu1| >= |mu2| > 0
  Jordan,           // repeated eigenvalue sigma >= 1, mu1 mu2 >= 0, mu2 != 0
  TypicalMineur,    // rotation-scaling with h > 1/cos(phi) or 0 < h < cos(phi)
  ComplexGeneral,   // eigenvector-angle bound, degree-free
  ComplexDegree,    // eigenvector-angle bound for one fixed degree
};

const char* certificate_name(CertificateKind kind);

enum class Direction {
  DecreasingIfKappa0Positive,
  IncreasingIfKappa0Positive,
  NotApplicable,
};

const char* direction_name(Direction d);

struct Certificate {
  CertificateKind kind = CertificateKind::CaoWang;
  bool holds = false;
  bool applicable = true; // false when the spectral variant does not match
  Direction direction = Direction::NotApplicable;
  std::vector<std::pair<std::string, double>> details;
  std::string reason; // why it fails or does not apply; empty when it holds
};

Certificate check_cao_wang(const Mat2& m);
Certificate check_positive_real(const Mat2& m, Vec2 w);
Certificate check_jordan(const Mat2& m, Vec2 w);
Certificate check_typical(const Mat2& m);
Certificate check_complex_general(const Mat2& m);
Certificate check_complex_degree(const Mat2& m, int degree);

// Every certificate relevant to the spec's spectral variant; inapplicable
// ones are reported with holds == false and a reason.
std::vector<Certificate> certify(const CurveSpec& spec);

enum class MonotonicityKind {
  MonotoneDecreasing,
  MonotoneIncreasing,
  NonMonotone,
  DegenerateLine,
};

const char* monotonicity_name(MonotonicityKind kind);

struct MonotonicityVerdict {
  MonotonicityKind kind = MonotonicityKind::DegenerateLine;
  std::vector<double> extrema; // interior sign changes of kappa', refined by bisection
  int grid = 0;
};

// Ground-truth sampling of the analytic derivative on a uniform grid.
MonotonicityVerdict numeric_monotonicity(const CurveSpec& spec, int grid = 2001);

// True when some held certificate contradicts the sampled verdict, either
// because the verdict is not monotone at all or because the direction implied
// by the certificate and sign(kappa0) disagrees with it.
bool soundness_alarm(const std::vector<Certificate>& certificates, double kappa0,
                     const MonotonicityVerdict& verdict);

} // namespace classa
