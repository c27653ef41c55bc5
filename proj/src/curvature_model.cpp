#include "classa/curvature_model.hpp"

#include <cmath>

#include "classa/error.hpp"

namespace classa {

namespace {

double ipow(double base, int exp) {
  if (exp < 0) return 1.0 / ipow(base, -exp);
  double r = 1.0;
  double b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// ||T^{n-1} w|| by repeated application; avoids eigen-expansion cancellation.
Vec2 iterate_vector(const Mat2& m, Vec2 v, int count) {
  for (int j = 0; j < count; ++j) v = m * v;
  return v;
}

} // namespace

CurvatureModel build_model(const CurveSpec& spec) {
  if (spec.degree < 2) fail(Errc::BadArgument, "build_model: degree must be at least 2");
  if (spec.seed.norm() == 0.0) fail(Errc::ZeroSeed, "build_model: zero seed vector");

  CurvatureModel model;
  model.spec = spec;
  model.spectral = decompose(spec.generator);
  model.coords = seed_coordinates(model.spectral, spec.seed);

  const int n = spec.degree;
  const double factor = static_cast<double>(n - 1) / n;
  const Vec2 w = spec.seed;
  const double nw3 = ipow(w.norm(), 3);

  if (const auto* rd = std::get_if<RealDiagonalizable>(&model.spectral)) {
    model.kappa0 = factor * model.coords.mu1 * model.coords.mu2 *
                   (rd->sigma2 - rd->sigma1) * det(rd->v1, rd->v2) / nw3;
    if (rd->scalar) model.kappa0 = 0.0;
  } else if (const auto* jb = std::get_if<Defective>(&model.spectral)) {
    model.kappa0 =
        -factor * model.coords.mu2 * model.coords.mu2 * det(jb->v1, jb->v2) / nw3;
  } else {
    // Non-real eigenvalues: det(w, Mw) is real and never zero for w != 0.
    model.kappa0 = factor * det(w, spec.generator * w) / nw3;
  }

  // A vanishing kappa(0) means the seed is an eigenvector and the whole curve
  // is a straight segment; every curvature query then returns zero.
  const Vec2 mw = spec.generator * w;
  model.degenerate = std::abs(det(w, mw)) <= 1e-12 * w.norm() * mw.norm() ||
                     std::abs(model.kappa0) == 0.0;
  if (model.degenerate) model.kappa0 = 0.0;
  return model;
}

double kappa_closed(const CurvatureModel& model, double t) {
  if (model.degenerate) return 0.0;
  if (t == 0.0) return model.kappa0;

  const CurveSpec& spec = model.spec;
  const int n = spec.degree;
  const Mat2 T = subdivision_matrix(spec.generator, t);
  const Vec2 prev = iterate_vector(T, spec.seed, n - 2);
  const Vec2 tw = T * prev;
  const double norm_tw = tw.norm();
  // Cancellation scale of the final product; small-but-clean norms pass.
  if (norm_tw <= 1e-14 * std::max(T.max_abs() * prev.norm(), 1e-300))
    fail(Errc::VanishingSpeed, "kappa_closed: vanishing endpoint velocity after subdivision");

  const double nw = spec.seed.norm();
  return model.kappa0 * ipow(T.det(), n - 2) * ipow(nw / norm_tw, 3);
}

ComplexDerivativeTerms complex_terms(const CurvatureModel& model, double t) {
  const auto* cp = std::get_if<ComplexPair>(&model.spectral);
  if (cp == nullptr)
    fail(Errc::WrongVariant, "complex_terms: generator does not have complex eigenvalues");

  const int n = model.spec.degree;
  const double h = cp->h, phi = cp->phi;

  ComplexDerivativeTerms terms;
  terms.drift = (h * std::cos(phi) - 1.0) * (1.0 - t) + t * (h * h - h * std::cos(phi));
  const double re = 1.0 - t + t * h * std::cos(phi);
  const double im = t * h * std::sin(phi);
  terms.mod_sigma_t = std::hypot(re, im);
  terms.phi_t = std::atan2(im, re);
  terms.theta = std::arg(model.coords.mu * model.coords.mu);
  terms.phase = std::polar(1.0, terms.theta + 2.0 * (n - 1) * terms.phi_t);
  return terms;
}

namespace {

double dkappa_real(const CurvatureModel& model, double t) {
  const auto& rd = std::get<RealDiagonalizable>(model.spectral);
  const int n = model.spec.degree;
  const double s1 = 1.0 - t + t * rd.sigma1;
  const double s2 = 1.0 - t + t * rd.sigma2;
  const double mu1 = model.coords.mu1, mu2 = model.coords.mu2;

  const double p1 = mu1 * mu1 * ipow(s1, 2 * n - 2);
  const double p2 = mu2 * mu2 * ipow(s2, 2 * n - 2);
  const double cross_term =
      2.0 * mu1 * mu2 * ipow(s1 * s2, n - 1) * rd.v1.dot(rd.v2);
  const double norm2 = p1 + p2 + cross_term; // ||T^{n-1} w||^2 in the unit eigenbasis

  const double pencil_slope = (rd.sigma1 + rd.sigma2 - 2.0) * (1.0 - t) +
                              (2.0 * rd.sigma1 * rd.sigma2 - rd.sigma1 - rd.sigma2) * t;
  const double bracket = -(n + 1) * pencil_slope * norm2 -
                         3.0 * (n - 1) * (rd.sigma1 - rd.sigma2) * (p1 - p2);

  const double nw3 = ipow(model.spec.seed.norm(), 3);
  return model.kappa0 * nw3 * ipow(s1 * s2, n - 3) * bracket /
         (2.0 * ipow(std::sqrt(norm2), 5));
}

double dkappa_jordan(const CurvatureModel& model, double t) {
  const auto& jb = std::get<Defective>(model.spectral);
  const int n = model.spec.degree;
  const double st = 1.0 - t + t * jb.sigma;
  const double mu1 = model.coords.mu1, mu2 = model.coords.mu2;
  const double nv1 = jb.v1.norm2();
  const double nv2 = jb.v2.norm2();

  const double lead = mu1 * st + mu2 * (n - 1) * t;
  const double q = lead * lead * nv1 + (mu2 * st) * (mu2 * st) * nv2;
  if (q <= 0.0 || st == 0.0)
    fail(Errc::VanishingSpeed, "dkappa: vanishing velocity in Jordan case");

  const double q32 = ipow(std::sqrt(q), 3);
  const double q52 = q32 * q;
  const double nw3 = ipow(model.spec.seed.norm(), 3);
  // ||T^{n-1} w|| factors as |sigma(t)|^{n-2} sqrt(Q): the norm power carries
  // an absolute value, only one division by sigma(t) keeps its sign.
  const double denom = ipow(std::abs(st), n - 2) * st;
  return -model.kappa0 * nw3 / denom *
         ((n + 1) * (jb.sigma - 1.0) / q32 +
          3.0 * mu2 * (n - 1) * lead * nv1 / q52);
}

double dkappa_complex(const CurvatureModel& model, double t) {
  const auto& cp = std::get<ComplexPair>(model.spectral);
  const auto terms = complex_terms(model, t);
  const int n = model.spec.degree;
  const double cg = std::cos(cp.gamma);

  const double bracket =
      (n + 1) * terms.drift * (-1.0 + cg * terms.phase.imag()) +
      3.0 * (n - 1) * cp.h * cg * std::sin(cp.phi) * terms.phase.real();

  // With ||T^{n-1} w||^2 = 2 ||v||^2 |mu|^2 |sigma(t)|^{2(n-1)} (1 - cos(gamma) Im z(t)),
  // the modulus powers of the prefactor collapse to |sigma(t)|^{-(n+3)}; keeping
  // them collapsed avoids overflow at large degrees.
  const double v2 = cp.re_v.norm2() + cp.im_v.norm2();
  const double mu2 = std::norm(model.coords.mu);
  const double sag = 1.0 - cg * terms.phase.imag();
  if (sag <= 0.0 || terms.mod_sigma_t == 0.0)
    fail(Errc::VanishingSpeed, "dkappa: vanishing velocity in complex case");

  const double nw3 = ipow(model.spec.seed.norm(), 3);
  const double base = std::sqrt(2.0 * v2 * mu2 * sag);
  return model.kappa0 * nw3 * bracket /
         (ipow(base, 3) * sag * ipow(terms.mod_sigma_t, n + 3));
}

} // namespace

double dkappa(const CurvatureModel& model, double t) {
  if (model.degenerate) return 0.0;
  if (std::holds_alternative<RealDiagonalizable>(model.spectral)) return dkappa_real(model, t);
  if (std::holds_alternative<Defective>(model.spectral)) return dkappa_jordan(model, t);
  return dkappa_complex(model, t);
}

} // namespace classa
