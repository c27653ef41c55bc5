#include "classa/certify.hpp"

#include <cmath>

#include "classa/error.hpp"

namespace classa {

const char* certificate_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::CaoWang: return "CaoWang";
    case CertificateKind::PositiveRealSeed: return "PositiveRealSeed";
    case CertificateKind::Jordan: return "Jordan";
    case CertificateKind::TypicalMineur: return "TypicalMineur";
    case CertificateKind::ComplexGeneral: return "ComplexGeneral";
    case CertificateKind::ComplexDegree: return "ComplexDegree";
  }
  return "?";
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::DecreasingIfKappa0Positive: return "decreasing-if-kappa0-positive";
    case Direction::IncreasingIfKappa0Positive: return "increasing-if-kappa0-positive";
    case Direction::NotApplicable: return "n/a";
  }
  return "?";
}

const char* monotonicity_name(MonotonicityKind kind) {
  switch (kind) {
    case MonotonicityKind::MonotoneDecreasing: return "monotone-decreasing";
    case MonotonicityKind::MonotoneIncreasing: return "monotone-increasing";
    case MonotonicityKind::NonMonotone: return "non-monotone";
    case MonotonicityKind::DegenerateLine: return "degenerate-line";
  }
  return "?";
}

namespace {

Certificate not_applicable(CertificateKind kind, const std::string& reason) {
  Certificate c;
  c.kind = kind;
  c.holds = false;
  c.applicable = false;
  c.reason = reason;
  return c;
}

} // namespace

Certificate check_cao_wang(const Mat2& m) {
  Certificate c;
  c.kind = CertificateKind::CaoWang;

  const double scale = std::max(1.0, m.max_abs());
  if (std::abs(m.a12 - m.a21) > 1e-12 * scale)
    return not_applicable(c.kind, "generator is not symmetric");

  const auto spectral = decompose(m);
  const auto* rd = std::get_if<RealDiagonalizable>(&spectral);
  if (rd == nullptr) return not_applicable(c.kind, "no real eigenvalue pair");

  c.details = {{"sigma1", rd->sigma1}, {"sigma2", rd->sigma2}};
  if (rd->sigma2 <= 0.0) {
    c.reason = "eigenvalues must be positive";
    return c;
  }
  if (rd->sigma1 < 1.0) {
    c.reason = "sigma1 < 1";
    return c;
  }
  if (2.0 * rd->sigma2 < rd->sigma1 + 1.0) {
    c.reason = "2 sigma2 < sigma1 + 1";
    return c;
  }
  c.holds = true;
  c.direction = Direction::DecreasingIfKappa0Positive;
  return c;
}

Certificate check_positive_real(const Mat2& m, Vec2 w) {
  Certificate c;
  c.kind = CertificateKind::PositiveRealSeed;

  const auto spectral = decompose(m);
  const auto* rd = std::get_if<RealDiagonalizable>(&spectral);
  if (rd == nullptr) return not_applicable(c.kind, "no real eigenvalue pair");
  if (rd->scalar) return not_applicable(c.kind, "scalar generator, curve degenerates to a line");

  const auto coords = seed_coordinates(spectral, w);
  c.details = {{"sigma1", rd->sigma1},
               {"sigma2", rd->sigma2},
               {"mu1", coords.mu1},
               {"mu2", coords.mu2}};

  if (rd->sigma2 <= 0.0) {
    c.reason = "eigenvalues must be positive";
    return c;
  }
  if (rd->sigma1 + rd->sigma2 < 2.0) {
    c.reason = "sigma1 + sigma2 < 2";
    return c;
  }
  const double mu_floor = 1e-12 * w.norm() / rd->v2.norm();
  if (std::abs(coords.mu2) <= mu_floor) {
    c.reason = "mu2 == 0, seed is an eigenvector";
    return c;
  }
  if (std::abs(coords.mu1) < std::abs(coords.mu2)) {
    c.reason = "|mu1| < |mu2|";
    return c;
  }
  c.holds = true;
  c.direction = Direction::DecreasingIfKappa0Positive;
  return c;
}

Certificate check_jordan(const Mat2& m, Vec2 w) {
  Certificate c;
  c.kind = CertificateKind::Jordan;

  const auto spectral = decompose(m);
  const auto* jb = std::get_if<Defective>(&spectral);
  if (jb == nullptr) return not_applicable(c.kind, "generator is diagonalizable");

  const auto coords = seed_coordinates(spectral, w);
  c.details = {{"sigma", jb->sigma}, {"mu1", coords.mu1}, {"mu2", coords.mu2}};

  if (jb->sigma < 1.0) {
    c.reason = "sigma < 1";
    return c;
  }
  const double mu_floor = 1e-12 * w.norm() / jb->v2.norm();
  if (std::abs(coords.mu2) <= mu_floor) {
    c.reason = "mu2 == 0, seed is an eigenvector";
    return c;
  }
  if (coords.mu1 * coords.mu2 < 0.0) {
    c.reason = "mu1 mu2 < 0";
    return c;
  }
  c.holds = true;
  c.direction = Direction::DecreasingIfKappa0Positive;
  return c;
}

Certificate check_typical(const Mat2& m) {
  Certificate c;
  c.kind = CertificateKind::TypicalMineur;

  const double scale = std::max(1.0, m.max_abs());
  const bool rotation_scaling =
      std::abs(m.a11 - m.a22) <= 1e-10 * scale && std::abs(m.a12 + m.a21) <= 1e-10 * scale;
  if (!rotation_scaling)
    return not_applicable(c.kind, "generator is not a rotation composed with a scaling");

  const double h = std::hypot(m.a11, m.a21);
  const double phi = std::atan2(m.a21, m.a11);
  c.details = {{"h", h}, {"phi", phi}};

  if (h <= 0.0) return not_applicable(c.kind, "zero generator");
  if (std::abs(phi) >= M_PI / 2.0)
    return not_applicable(c.kind, "|phi| >= pi/2");
  if (phi == 0.0) return not_applicable(c.kind, "phi == 0, no rotation");

  const double cphi = std::cos(phi);
  c.details.emplace_back("1/cos(phi)", 1.0 / cphi);
  c.details.emplace_back("cos(phi)", cphi);
  if (h > 1.0 / cphi) {
    c.holds = true;
    c.direction = Direction::DecreasingIfKappa0Positive;
  } else if (h < cphi) {
    c.holds = true;
    c.direction = Direction::IncreasingIfKappa0Positive;
  } else {
    c.reason = "cos(phi) <= h <= 1/cos(phi)";
  }
  return c;
}

namespace {

// |cos(gamma)| bound common to the two complex certificates.  With weight
// (p, q) the bound reads p / sqrt(p^2 + q^2); a non-positive p makes the
// branch vacuous since |cos(gamma)| >= 0.
double angle_bound(double p, double q) { return p / std::hypot(p, q); }

} // namespace

Certificate check_complex_general(const Mat2& m) {
  Certificate c;
  c.kind = CertificateKind::ComplexGeneral;

  const auto spectral = decompose(m);
  const auto* cp = std::get_if<ComplexPair>(&spectral);
  if (cp == nullptr) return not_applicable(c.kind, "eigenvalues are real");

  const double h = cp->h, phi = cp->phi;
  const double cg = std::abs(std::cos(cp->gamma));
  const double expanding = h * std::cos(phi) - 1.0;
  const double contracting = std::cos(phi) - h;
  const double bound_dec = angle_bound(expanding, 3.0 * h * std::sin(phi));
  const double bound_inc = angle_bound(contracting, 3.0 * std::sin(phi));

  c.details = {{"h", h},
               {"phi", phi},
               {"gamma", cp->gamma},
               {"|cos(gamma)|", cg},
               {"bound_decreasing", bound_dec},
               {"bound_increasing", bound_inc}};

  if (expanding > 0.0 && cg < bound_dec) {
    c.holds = true;
    c.direction = Direction::DecreasingIfKappa0Positive;
  } else if (contracting > 0.0 && cg < bound_inc) {
    c.holds = true;
    c.direction = Direction::IncreasingIfKappa0Positive;
  } else {
    c.reason = "|cos(gamma)| not below either branch bound";
  }
  return c;
}

Certificate check_complex_degree(const Mat2& m, int degree) {
  Certificate c;
  c.kind = CertificateKind::ComplexDegree;
  if (degree < 2) fail(Errc::BadArgument, "check_complex_degree: degree must be at least 2");

  const auto spectral = decompose(m);
  const auto* cp = std::get_if<ComplexPair>(&spectral);
  if (cp == nullptr) return not_applicable(c.kind, "eigenvalues are real");

  const double h = cp->h, phi = cp->phi;
  const double n1 = degree + 1.0, n9 = 3.0 * (degree - 1.0);
  const double cg = std::abs(std::cos(cp->gamma));
  const double bound_dec = angle_bound(n1 * (h * std::cos(phi) - 1.0), n9 * h * std::sin(phi));
  const double bound_inc = angle_bound(n1 * (std::cos(phi) - h), n9 * std::sin(phi));

  c.details = {{"n", static_cast<double>(degree)},
               {"|cos(gamma)|", cg},
               {"bound_decreasing", bound_dec},
               {"bound_increasing", bound_inc}};

  if (cg <= bound_dec) {
    c.holds = true;
    c.direction = Direction::DecreasingIfKappa0Positive;
  } else if (cg <= bound_inc) {
    c.holds = true;
    c.direction = Direction::IncreasingIfKappa0Positive;
  } else {
    c.reason = "|cos(gamma)| above both degree bounds";
  }
  return c;
}

std::vector<Certificate> certify(const CurveSpec& spec) {
  const auto model = build_model(spec);
  std::vector<Certificate> out;

  if (model.degenerate) {
    for (CertificateKind kind :
         {CertificateKind::CaoWang, CertificateKind::PositiveRealSeed, CertificateKind::Jordan,
          CertificateKind::TypicalMineur, CertificateKind::ComplexGeneral,
          CertificateKind::ComplexDegree})
      out.push_back(not_applicable(kind, "curve degenerates to a line segment"));
    return out;
  }

  const Mat2& m = spec.generator;
  out.push_back(check_cao_wang(m));
  out.push_back(check_positive_real(m, spec.seed));
  out.push_back(check_jordan(m, spec.seed));
  out.push_back(check_typical(m));
  out.push_back(check_complex_general(m));
  out.push_back(check_complex_degree(m, spec.degree));
  return out;
}

bool soundness_alarm(const std::vector<Certificate>& certificates, double kappa0,
                     const MonotonicityVerdict& verdict) {
  for (const auto& cert : certificates) {
    if (!cert.holds) continue;
    const bool decreasing =
        (cert.direction == Direction::DecreasingIfKappa0Positive) == (kappa0 > 0.0);
    const auto expected = decreasing ? MonotonicityKind::MonotoneDecreasing
                                     : MonotonicityKind::MonotoneIncreasing;
    if (verdict.kind != expected) return true;
  }
  return false;
}

MonotonicityVerdict numeric_monotonicity(const CurveSpec& spec, int grid) {
  if (grid < 101) fail(Errc::BadArgument, "numeric_monotonicity: grid must be at least 101");

  const auto model = build_model(spec);
  MonotonicityVerdict verdict;
  verdict.grid = grid;
  if (model.degenerate) {
    verdict.kind = MonotonicityKind::DegenerateLine;
    return verdict;
  }

  std::vector<double> dk(static_cast<size_t>(grid));
  double max_kappa = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / (grid - 1);
    dk[static_cast<size_t>(i)] = dkappa(model, t);
    max_kappa = std::max(max_kappa, std::abs(kappa_closed(model, t)));
  }

  const double dead_band = 1e-12 * max_kappa;
  const auto sign_of = [dead_band](double v) -> int {
    if (v > dead_band) return 1;
    if (v < -dead_band) return -1;
    return 0;
  };

  bool any_pos = false, any_neg = false;
  int prev_sign = 0;
  double prev_t = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / (grid - 1);
    const int s = sign_of(dk[static_cast<size_t>(i)]);
    if (s > 0) any_pos = true;
    if (s < 0) any_neg = true;
    if (s != 0 && prev_sign != 0 && s != prev_sign) {
      // Bisect the sign change of the analytic derivative.
      double lo = prev_t, hi = t;
      double flo = dkappa(model, lo);
      while (hi - lo > 1e-10) {
        const double mid = (lo + hi) / 2.0;
        const double fm = dkappa(model, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      verdict.extrema.push_back((lo + hi) / 2.0);
    }
    if (s != 0) {
      prev_sign = s;
      prev_t = t;
    }
  }

  if (!verdict.extrema.empty())
    verdict.kind = MonotonicityKind::NonMonotone;
  else if (any_neg && !any_pos)
    verdict.kind = MonotonicityKind::MonotoneDecreasing;
  else if (any_pos && !any_neg)
    verdict.kind = MonotonicityKind::MonotoneIncreasing;
  else
    verdict.kind = MonotonicityKind::MonotoneDecreasing; // derivative within dead band everywhere
  return verdict;
}

} // namespace classa
