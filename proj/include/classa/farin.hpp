#pragma once

#include <optional>
#include <vector>

#include "classa/geometry.hpp"

namespace classa {

// Audit of the classical Class A matrix conditions: the expansion property,
// the singular-value gap (in both its corrected and misprinted readings),
// survival of the gap condition under subdivision, and the area-chain bound
// that repairs the original endpoint-curvature argument.

struct ExpansionResult {
  bool holds = false;
  double min_symmetric_eigenvalue = 0.0;
};

// Holds when ||(1-t) v + t M v|| >= ||v|| for every v and t, i.e. when the
// symmetric part of M has minimum eigenvalue >= 1.
ExpansionResult expansion_condition(const Mat2& m);
ExpansionResult expansion_condition(const Mat3& m);

// v . Mv / (v . v); values below 1 witness failure of the expansion property.
double zhao_ratio(const Mat2& m, Vec2 v);
double zhao_ratio(const Mat3& m, Vec3 v);

struct SingularValueCondition {
  std::vector<double> sv; // descending
  bool corrected_holds = false; // sigma_min^3 >= sigma_max
  bool misprint_holds = false;  // sigma_min^2 >= sigma_max
};

SingularValueCondition sv_condition(const Mat2& m);
SingularValueCondition sv_condition(const Mat3& m);

// f(t) = (1 - t + sigma_min t)^3 - (1 - t + sigma_max t) tabulated on a grid;
// the corrected gap condition survives subdivision at t exactly when f(t) >= 0.
std::vector<std::pair<double, double>> subdivision_sv_profile(double sigma_min,
                                                              double sigma_max, int grid);

// f'(0) = 3 sigma_min - sigma_max - 2.
double subdivision_profile_slope0(double sigma_min, double sigma_max);

struct TriangleChain {
  std::vector<double> areas;  // area of the triangle spanned by M^{j-1} v and M^j v
  std::vector<double> angles; // angle between consecutive iterates
};

TriangleChain triangle_chain(const Mat2& m, Vec2 v, int n);
TriangleChain triangle_chain(const Mat3& m, Vec3 v, int n);

struct AreaBounds {
  double lower = 0.0;
  double actual = 0.0;
  double upper = 0.0;
};

// sigma_min^2 |D| sin(a2)/sin(a1) <= |MD| <= sigma_max^2 |D| sin(a2)/sin(a1).
AreaBounds corrected_area_bounds(const Mat2& m, Vec2 v);
AreaBounds corrected_area_bounds(const Mat3& m, Vec3 v);

struct Proposition1Result {
  int n = 0;
  double lhs = 0.0; // sigma_min^{3(n-1)}
  double rhs = 0.0; // sigma_max^{2(n-2)} sin(alpha_{n-1}) / sin(alpha_1)
  bool hypothesis_holds = false;
  bool conclusion_holds = false; // |D|/||v||^3 >= |M^{n-2} D| / ||M^{n-1} v||^3
  std::vector<double> angles;
  std::vector<double> areas;
};

Proposition1Result proposition1(const Mat2& m, Vec2 v, int n);
Proposition1Result proposition1(const Mat3& m, Vec3 v, int n);

struct ClassAReport {
  ExpansionResult expansion{};
  SingularValueCondition sv{};
  std::vector<std::pair<double, double>> profile;
  double f_prime_at_zero = 0.0;
  double f_min = 0.0;
  double f_min_t = 0.0;
  std::optional<double> witness_t;    // t in (0, 0.1] with f(t) < 0, when one exists
  std::optional<double> seed_ratio;   // zhao_ratio for the supplied seed
  std::optional<Proposition1Result> prop1;
};

ClassAReport class_a_report(const Mat2& m, std::optional<Vec2> seed, int degree, int grid);

// Profile-only variant when just the extreme singular values are given.
ClassAReport class_a_report(double sigma_min, double sigma_max, int grid);

} // namespace classa
