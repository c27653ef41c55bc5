#include "classa/farin.hpp"

#include <cmath>

#include "classa/error.hpp"
#include "classa/spectral.hpp"

namespace classa {

namespace {

constexpr double kExpansionTol = 1e-12;
constexpr double kSinFloor = 1e-12;

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// The chains embed planar input with z = 0 so areas and angles are computed
// the same way in both dimensions.
std::vector<Vec3> iterate_chain(const Mat3& m, Vec3 v, int count) {
  if (v.norm() == 0.0) fail(Errc::ZeroVector, "triangle chain: zero start vector");
  std::vector<Vec3> chain;
  chain.reserve(static_cast<size_t>(count));
  chain.push_back(v);
  for (int j = 1; j < count; ++j) chain.push_back(m * chain.back());
  return chain;
}

TriangleChain chain_from(const std::vector<Vec3>& iterates) {
  TriangleChain tc;
  for (size_t j = 0; j + 1 < iterates.size(); ++j) {
    const Vec3 a = iterates[j];
    const Vec3 b = iterates[j + 1];
    if (a.norm() == 0.0 || b.norm() == 0.0)
      fail(Errc::ZeroVector, "triangle chain: iterate collapsed to zero");
    // Sine through the cross product: exactly zero for parallel iterates,
    // where the dot-product route would leave an O(sqrt(eps)) residue.
    const double cross_norm = cross(a, b).norm();
    if (cross_norm <= kSinFloor * a.norm() * b.norm())
      fail(Errc::CollinearPair, "triangle chain: consecutive iterates are collinear");
    tc.areas.push_back(0.5 * cross_norm);
    tc.angles.push_back(std::atan2(cross_norm, a.dot(b)));
  }
  return tc;
}

AreaBounds area_bounds_impl(const TriangleChain& tc, double sigma_min, double sigma_max) {
  const double ratio = std::sin(tc.angles[1]) / std::sin(tc.angles[0]);
  AreaBounds b;
  b.lower = sigma_min * sigma_min * tc.areas[0] * ratio;
  b.actual = tc.areas[1];
  b.upper = sigma_max * sigma_max * tc.areas[0] * ratio;
  return b;
}

Proposition1Result proposition1_impl(const TriangleChain& tc, const std::vector<Vec3>& iterates,
                                     double sigma_min, double sigma_max, int n) {
  Proposition1Result r;
  r.n = n;
  r.angles = tc.angles;
  r.areas = tc.areas;
  r.lhs = ipow(sigma_min, 3 * (n - 1));
  r.rhs = ipow(sigma_max, 2 * (n - 2)) * std::sin(tc.angles.back()) / std::sin(tc.angles.front());
  r.hypothesis_holds = r.lhs >= r.rhs;

  const double nv = iterates.front().norm();
  const double nlast = iterates.back().norm();
  r.conclusion_holds =
      tc.areas.front() / ipow(nv, 3) >= tc.areas.back() / ipow(nlast, 3);
  return r;
}

} // namespace

ExpansionResult expansion_condition(const Mat2& m) {
  const Mat2 sym{m.a11, (m.a12 + m.a21) / 2.0, (m.a12 + m.a21) / 2.0, m.a22};
  const auto ev = symmetric_eigenvalues(sym);
  return {ev[1] >= 1.0 - kExpansionTol, ev[1]};
}

ExpansionResult expansion_condition(const Mat3& m) {
  Mat3 sym;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sym(i, j) = (m(i, j) + m(j, i)) / 2.0;
  const auto ev = symmetric_eigenvalues(sym);
  return {ev[2] >= 1.0 - kExpansionTol, ev[2]};
}

double zhao_ratio(const Mat2& m, Vec2 v) {
  const double n2 = v.norm2();
  if (n2 == 0.0) fail(Errc::ZeroVector, "zhao_ratio: zero vector");
  return v.dot(m * v) / n2;
}

double zhao_ratio(const Mat3& m, Vec3 v) {
  const double n2 = v.dot(v);
  if (n2 == 0.0) fail(Errc::ZeroVector, "zhao_ratio: zero vector");
  return v.dot(m * v) / n2;
}

namespace {

SingularValueCondition sv_condition_from(std::vector<double> sv) {
  SingularValueCondition c;
  c.sv = std::move(sv);
  const double smax = c.sv.front();
  const double smin = c.sv.back();
  c.corrected_holds = smin * smin * smin >= smax;
  c.misprint_holds = smin * smin >= smax;
  return c;
}

} // namespace

SingularValueCondition sv_condition(const Mat2& m) {
  const auto sv = singular_values(m);
  return sv_condition_from({sv[0], sv[1]});
}

SingularValueCondition sv_condition(const Mat3& m) {
  const auto sv = singular_values(m);
  return sv_condition_from({sv[0], sv[1], sv[2]});
}

std::vector<std::pair<double, double>> subdivision_sv_profile(double sigma_min, double sigma_max,
                                                              int grid) {
  if (!(0.0 < sigma_min && sigma_min <= sigma_max))
    fail(Errc::BadArgument, "subdivision_sv_profile: need 0 < sigma_min <= sigma_max");
  if (grid < 2) fail(Errc::BadArgument, "subdivision_sv_profile: grid must be at least 2");

  std::vector<std::pair<double, double>> profile;
  profile.reserve(static_cast<size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / (grid - 1);
    const double lo = 1.0 - t + sigma_min * t;
    const double hi = 1.0 - t + sigma_max * t;
    profile.emplace_back(t, lo * lo * lo - hi);
  }
  return profile;
}

double subdivision_profile_slope0(double sigma_min, double sigma_max) {
  return 3.0 * sigma_min - sigma_max - 2.0;
}

TriangleChain triangle_chain(const Mat2& m, Vec2 v, int n) {
  if (n < 3) fail(Errc::BadArgument, "triangle_chain: need n >= 3");
  return chain_from(iterate_chain(Mat3::from_mat2(m), embed(v), n));
}

TriangleChain triangle_chain(const Mat3& m, Vec3 v, int n) {
  if (n < 3) fail(Errc::BadArgument, "triangle_chain: need n >= 3");
  return chain_from(iterate_chain(m, v, n));
}

AreaBounds corrected_area_bounds(const Mat2& m, Vec2 v) {
  const auto tc = triangle_chain(m, v, 3);
  const auto sv = singular_values(m);
  return area_bounds_impl(tc, sv[1], sv[0]);
}

AreaBounds corrected_area_bounds(const Mat3& m, Vec3 v) {
  const auto tc = chain_from(iterate_chain(m, v, 3));
  const auto sv = singular_values(m);
  return area_bounds_impl(tc, sv[2], sv[0]);
}

Proposition1Result proposition1(const Mat2& m, Vec2 v, int n) {
  if (n < 3) fail(Errc::BadArgument, "proposition1: need n >= 3");
  const auto iterates = iterate_chain(Mat3::from_mat2(m), embed(v), n);
  const auto tc = chain_from(iterates);
  const auto sv = singular_values(m);
  return proposition1_impl(tc, iterates, sv[1], sv[0], n);
}

Proposition1Result proposition1(const Mat3& m, Vec3 v, int n) {
  if (n < 3) fail(Errc::BadArgument, "proposition1: need n >= 3");
  const auto iterates = iterate_chain(m, v, n);
  const auto tc = chain_from(iterates);
  const auto sv = singular_values(m);
  return proposition1_impl(tc, iterates, sv[2], sv[0], n);
}

namespace {

void fill_profile(ClassAReport& report, double sigma_min, double sigma_max, int grid) {
  report.profile = subdivision_sv_profile(sigma_min, sigma_max, grid);
  report.f_prime_at_zero = subdivision_profile_slope0(sigma_min, sigma_max);

  report.f_min = report.profile.front().second;
  report.f_min_t = report.profile.front().first;
  for (const auto& [t, f] : report.profile) {
    if (f < report.f_min) {
      report.f_min = f;
      report.f_min_t = t;
    }
  }

  // Early-subdivision witness of failure: scan (0, 0.1] on a log-spaced grid
  // and keep the first parameter with f(t) < 0.
  double found = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = 0.1 * std::pow(10.0, -6.0 * (1.0 - static_cast<double>(i) / 400));
    const double lo = 1.0 - t + sigma_min * t;
    const double f = lo * lo * lo - (1.0 - t + sigma_max * t);
    if (f < 0.0) {
      found = t;
      break;
    }
  }
  if (found > 0.0) report.witness_t = found;
}

} // namespace

ClassAReport class_a_report(const Mat2& m, std::optional<Vec2> seed, int degree, int grid) {
  ClassAReport report;
  report.expansion = expansion_condition(m);
  report.sv = sv_condition(m);
  fill_profile(report, report.sv.sv.back(), report.sv.sv.front(), grid);

  if (seed) {
    report.seed_ratio = zhao_ratio(m, *seed);
    if (degree >= 3) {
      try {
        report.prop1 = proposition1(m, *seed, degree);
      } catch (const Error&) {
        // Collinear chains leave the proposition unevaluated.
      }
    }
  }
  return report;
}

ClassAReport class_a_report(double sigma_min, double sigma_max, int grid) {
  ClassAReport report;
  report.sv.sv = {sigma_max, sigma_min};
  report.sv.corrected_holds = sigma_min * sigma_min * sigma_min >= sigma_max;
  report.sv.misprint_holds = sigma_min * sigma_min >= sigma_max;
  fill_profile(report, sigma_min, sigma_max, grid);
  return report;
}

} // namespace classa
