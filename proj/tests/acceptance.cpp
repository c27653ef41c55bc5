// Acceptance suite: one check per release criterion, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "classa/certify.hpp"
#include "classa/curvature_model.hpp"
#include "classa/document.hpp"
#include "classa/farin.hpp"
#include "classa/gallery.hpp"
#include "support.hpp"

using namespace classa;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& label, const std::string& detail) {
  std::printf("criterion %2d: %s - %s (%s)\n", index, pass ? "PASS" : "FAIL", label.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// 1. Closed-form curvature against the direct polygon route.
void criterion_closed_vs_direct() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  long points = 0;

  const auto sweep = [&](const CurveSpec& spec) {
    const auto model = build_model(spec);
    if (model.degenerate) return;
    const auto poly = generate_polygon(spec);
    for (int i = 0; i <= 1000; ++i) {
      const double t = i / 1000.0;
      const double closed = kappa_closed(model, t);
      const double direct = curvature_numeric(poly, t);
      worst = std::max(worst, std::abs(closed - direct) / std::max(1.0, std::abs(direct)));
      ++points;
    }
  };

  for (const auto& record : example_gallery()) sweep(to_curve_spec(record.doc));
  oracle::Rng rng(1001);
  for (int i = 0; i < 200; ++i) sweep(oracle::random_real_spec(rng));
  for (int i = 0; i < 200; ++i) sweep(oracle::random_jordan_spec(rng));
  for (int i = 0; i < 200; ++i) sweep(oracle::random_complex_spec(rng));

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, worst <= 1e-9 && seconds < 10.0, "closed-form vs direct curvature",
         fmt("max relative deviation %.3g over %ld points, %.2fs", worst, points, seconds));
}

// 2. The bundled verdict table, in process and through the CLI.
void criterion_example_table() {
  const auto runs = run_gallery();
  int mismatches = 0;
  for (const auto& run : runs)
    if (!run.pass) ++mismatches;

  std::string detail = fmt("%zu records, %d mismatches", runs.size(), mismatches);
  bool cli_ok = true;
  if (const char* cli = std::getenv("CLASSA_CLI"); cli != nullptr && cli[0] != '\0') {
    const std::string command = std::string("\"") + cli + "\" examples > /dev/null 2>&1";
    cli_ok = std::system(command.c_str()) == 0;
    detail += cli_ok ? ", CLI run exit 0" : ", CLI run FAILED";
  } else {
    detail += ", CLI not exercised (CLASSA_CLI unset)";
  }
  report(2, runs.size() == 16 && mismatches == 0 && cli_ok, "example verdict table", detail);
}

// 3. The cited expansion-condition failure.
void criterion_zhao() {
  const Mat2 m{1.2545, -2.9594, 1.5576, 2.3836};
  const Vec2 v{0.9724, 0.2333};
  const double ratio = zhao_ratio(m, v);
  const auto expansion = expansion_condition(m);
  report(3, std::abs(ratio - 0.9979) <= 5e-4 && !expansion.holds,
         "expansion-failure witness ratio",
         fmt("ratio %.6f, min symmetric eigenvalue %.6f", ratio,
             expansion.min_symmetric_eigenvalue));
}

// 4. The borderline singular-value pair survives subdivision.
void criterion_borderline_pair() {
  const double smin = 1.05, smax = 1.102;
  const bool corrected = smin * smin * smin >= smax;
  const auto profile = subdivision_sv_profile(smin, smax, 10001);
  double fmin = 1e300, f_half = 1e300;
  for (const auto& [t, f] : profile) {
    fmin = std::min(fmin, f);
    if (t == 0.5) f_half = f;
  }
  // Reference value from the profile definition itself: 1.025^3 - 1.051.
  const double expected_half = std::pow(1.025, 3) - 1.051;
  report(4,
         corrected && fmin >= 0.0 && std::abs(f_half - expected_half) <= 1e-6 &&
             std::abs(expected_half - 0.025890625) <= 1e-12,
         "borderline pair survives subdivision",
         fmt("min f %.6g, f(0.5) %.9f", fmin, f_half));
}

// 5. Non-preservation witness for the wide pair.
void criterion_wide_pair() {
  const double slope = subdivision_profile_slope0(1.5, 3.0);
  const auto audit = class_a_report(1.5, 3.0, 2001);
  const bool witness_ok = audit.witness_t.has_value() && *audit.witness_t > 0.0 &&
                          *audit.witness_t <= 0.1;
  double f_at_witness = 0.0;
  if (witness_ok) {
    const double t = *audit.witness_t;
    f_at_witness = std::pow(1.0 - t + 1.5 * t, 3) - (1.0 - t + 3.0 * t);
  }
  report(5, std::abs(slope + 0.5) <= 1e-12 && witness_ok && f_at_witness < 0.0,
         "subdivision failure witness",
         fmt("f'(0) %.12f, witness t %.3g, f(witness) %.3g", slope,
             witness_ok ? *audit.witness_t : -1.0, f_at_witness));
}

// 6. Right-quotient eigenvalues and the product condition.
void criterion_right_quotient() {
  const Mat2 q = right_quotient_matrix(Mat2::diagonal(2.0, 0.5), 0.75);
  const auto sd = decompose(q);
  const auto& rd = std::get<RealDiagonalizable>(sd);
  const bool eigen_ok = std::abs(rd.sigma1 - 8.0 / 7.0) <= 1e-12 &&
                        std::abs(rd.sigma2 - 0.8) <= 1e-12 && rd.sigma1 + rd.sigma2 < 2.0;

  oracle::Rng rng(1006);
  int violations = 0, trials = 0;
  while (trials < 1000) {
    const double s1 = rng.uniform(0.5, 3.0);
    const double s2 = rng.uniform(0.5, 3.0);
    if (2.0 * s1 * s2 - s1 - s2 < 0.0) continue;
    const double t = rng.uniform(0.0, 0.98);
    const Mat2 rq = right_quotient_matrix(Mat2::diagonal(s1, s2), t);
    if (2.0 * rq.a11 * rq.a22 - rq.a11 - rq.a22 < -1e-12) ++violations;
    ++trials;
  }
  report(6, eigen_ok && violations == 0, "right-quotient eigenvalue conditions",
         fmt("eigenvalues %.12f %.12f, %d/1000 product violations", rd.sigma1, rd.sigma2,
             violations));
}

// 7. Degree window of the fixed complex generator.
void criterion_degree_window() {
  const Mat2 m = matrix_from_eigen_form(4.0, M_PI / 6.0, 2.0 * M_PI / 3.0);
  bool ok = true;
  for (int n = 2; n <= 5; ++n) ok = ok && check_complex_degree(m, n).holds;
  for (int n = 6; n <= 12; ++n) ok = ok && !check_complex_degree(m, n).holds;
  report(7, ok, "degree-dependent angle bound window", "holds for n=2..5, fails for n=6..12");
}

// 8. Rotation-scaling thresholds, oracle confirmed at degree 7.
void criterion_rotation_scaling() {
  const auto certified = check_typical(Mat2::rotation_scaling(1.8, 0.925));
  const auto rejected = check_typical(Mat2::rotation_scaling(1.2, 0.925));
  const auto v18 =
      numeric_monotonicity(CurveSpec{7, Mat2::rotation_scaling(1.8, 0.925), {0.4, 0.1}, {0, 0}});
  const auto v12 =
      numeric_monotonicity(CurveSpec{7, Mat2::rotation_scaling(1.2, 0.925), {0.4, 0.1}, {0, 0}});
  report(8,
         certified.holds && !rejected.holds &&
             v18.kind == MonotonicityKind::MonotoneDecreasing &&
             v12.kind == MonotonicityKind::NonMonotone,
         "rotation-scaling thresholds",
         fmt("1/cos(0.925) = %.6f; h=1.8 %s, h=1.2 %s", 1.0 / std::cos(0.925),
             monotonicity_name(v18.kind), monotonicity_name(v12.kind)));
}

// 9. Soundness sweep: hypothesis-satisfying instances are oracle-monotone in
// the certified direction; the contradiction alarm stays silent.
void criterion_soundness() {
  oracle::Rng rng(1009);
  int confirmed = 0, failures = 0, alarms = 0;
  const int per_certificate = 1000;

  const auto run_case = [&](const CurveSpec& spec, const Certificate& cert) {
    const auto model = build_model(spec);
    if (model.degenerate) {
      ++alarms;
      return;
    }
    const auto verdict = numeric_monotonicity(spec);
    const bool monotone = verdict.kind == MonotonicityKind::MonotoneDecreasing ||
                          verdict.kind == MonotonicityKind::MonotoneIncreasing;
    if (!monotone) {
      ++alarms;
      return;
    }
    const bool kappa0_positive = model.kappa0 > 0.0;
    const auto expected =
        (cert.direction == Direction::DecreasingIfKappa0Positive) == kappa0_positive
            ? MonotonicityKind::MonotoneDecreasing
            : MonotonicityKind::MonotoneIncreasing;
    if (verdict.kind == expected)
      ++confirmed;
    else
      ++failures;
  };

  // Symmetric generators in the certified wedge.
  for (int n = 0; n < per_certificate;) {
    const double s1 = rng.uniform(1.0, 3.0);
    const double s2 = rng.uniform((s1 + 1.0) / 2.0, s1);
    if (s1 - s2 < 1e-3) continue;
    const double a = rng.uniform(0.0, M_PI);
    const Mat2 rot{std::cos(a), -std::sin(a), std::sin(a), std::cos(a)};
    const Mat2 m = rot * Mat2::diagonal(s1, s2) * rot.transpose();
    const auto cert = check_cao_wang(m);
    if (!cert.holds) continue;
    const auto sd = decompose(m);
    const auto* rd = std::get_if<RealDiagonalizable>(&sd);
    if (rd == nullptr) continue;
    const double mu1 = rng.sign() * rng.uniform(0.1, 2.0);
    const double mu2 = rng.sign() * rng.uniform(0.1, 2.0);
    run_case(CurveSpec{rng.integer(2, 8), m, rd->v1 * mu1 + rd->v2 * mu2, {0, 0}}, cert);
    ++n;
  }

  // Oblique eigenbases with eigenvalue sum at least two.
  for (int n = 0; n < per_certificate;) {
    auto spec = oracle::random_real_spec(rng);
    const auto sd = decompose(spec.generator);
    const auto* rd = std::get_if<RealDiagonalizable>(&sd);
    if (rd == nullptr || rd->scalar || rd->sigma2 <= 0.0 || rd->sigma1 + rd->sigma2 < 2.0)
      continue;
    const double mu2 = rng.sign() * rng.uniform(0.1, 1.0);
    const double mu1 = rng.sign() * (std::abs(mu2) + rng.uniform(0.0, 1.0));
    spec.seed = rd->v1 * mu1 + rd->v2 * mu2;
    const auto cert = check_positive_real(spec.generator, spec.seed);
    if (!cert.holds) continue;
    run_case(spec, cert);
    ++n;
  }

  // Jordan generators with eigenvalue at least one.
  for (int n = 0; n < per_certificate;) {
    auto spec = oracle::random_jordan_spec(rng);
    const auto sd = decompose(spec.generator);
    const auto* jb = std::get_if<Defective>(&sd);
    if (jb == nullptr || jb->sigma < 1.0) continue;
    const double mu2 = rng.sign() * rng.uniform(0.1, 1.5);
    const double mu1 = (mu2 > 0 ? 1.0 : -1.0) * rng.uniform(0.0, 1.5);
    spec.seed = jb->v1 * mu1 + jb->v2 * mu2;
    const auto cert = check_jordan(spec.generator, spec.seed);
    if (!cert.holds) continue;
    run_case(spec, cert);
    ++n;
  }

  // Rotation-scaling generators in either certified band.
  for (int n = 0; n < per_certificate;) {
    const double phi = rng.sign() * rng.uniform(0.05, 1.2);
    const double h = (n % 2 == 0)
                         ? rng.uniform(1.0 / std::cos(phi) + 0.01, 4.0)
                         : rng.uniform(0.05, std::cos(phi) - 0.01);
    if (h <= 0.0) continue;
    const Mat2 m = Mat2::rotation_scaling(h, phi);
    const auto cert = check_typical(m);
    if (!cert.holds) continue;
    run_case(CurveSpec{rng.integer(2, 8), m, rng.unit() * rng.uniform(0.3, 2.0), {0, 0}}, cert);
    ++n;
  }

  // General complex pairs below the angle bound (both branches).
  for (int n = 0; n < per_certificate;) {
    const double phi = rng.uniform(0.05, 1.2);
    double h, margin, weight;
    if (n % 2 == 0) {
      h = rng.uniform(1.0 / std::cos(phi) + 0.02, 4.0);
      margin = h * std::cos(phi) - 1.0;
      weight = 3.0 * h * std::sin(phi);
    } else {
      h = rng.uniform(0.05, std::cos(phi) - 0.02);
      if (h <= 0.0) continue;
      margin = std::cos(phi) - h;
      weight = 3.0 * std::sin(phi);
    }
    const double bound = margin / std::hypot(margin, weight);
    const double gamma = std::acos(rng.uniform(-0.98, 0.98) * bound);
    const Mat2 m = matrix_from_eigen_form(h, rng.sign() * phi, gamma);
    const auto cert = check_complex_general(m);
    if (!cert.holds) continue;
    run_case(CurveSpec{rng.integer(2, 8), m, rng.unit() * rng.uniform(0.3, 2.0), {0, 0}}, cert);
    ++n;
  }

  report(9, failures == 0 && alarms == 0 && confirmed == 5 * per_certificate,
         "certificate soundness sweep",
         fmt("%d confirmed, %d direction failures, %d alarms", confirmed, failures, alarms));
}

// 10. Subdivision against the raw triangle scheme.
void criterion_subdivision() {
  oracle::Rng rng(1010);
  double worst = 0.0;
  int checked = 0;
  while (checked < 500) {
    CurveSpec spec;
    switch (checked % 3) {
      case 0: spec = oracle::random_real_spec(rng); break;
      case 1: spec = oracle::random_jordan_spec(rng); break;
      default: spec = oracle::random_complex_spec(rng); break;
    }
    const double t = rng.uniform(0.02, 0.98);
    if (std::abs(subdivision_matrix(spec.generator, t).det()) < 1e-6) continue;

    const auto poly = generate_polygon(spec);
    const double scale = polygon_scale(poly);
    const auto [left_ref, right_ref] = oracle::de_casteljau_split(poly, t);
    const auto left = generate_polygon(subdivide_left(spec, t));
    const auto right = generate_polygon(subdivide_right(spec, t));
    for (size_t j = 0; j < left_ref.size(); ++j) {
      worst = std::max(worst, (left[j] - left_ref[j]).norm() / scale);
      worst = std::max(worst, (right[j] - right_ref[j]).norm() / scale);
    }
    ++checked;
  }
  report(10, worst <= 1e-10, "subdivision matches the triangle scheme",
         fmt("max relative deviation %.3g over %d splits", worst, checked));
}

} // namespace

int main() {
  criterion_closed_vs_direct();
  criterion_example_table();
  criterion_zhao();
  criterion_borderline_pair();
  criterion_wide_pair();
  criterion_right_quotient();
  criterion_degree_window();
  criterion_rotation_scaling();
  criterion_soundness();
  criterion_subdivision();

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
