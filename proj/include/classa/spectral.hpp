#pragma once

#include <array>
#include <complex>
#include <variant>

#include "classa/geometry.hpp"

namespace classa {

// Eigenstructure of a real 2x2 matrix, classified by the discriminant of its
// characteristic polynomial.  Exactly one of the three variants applies.

struct RealDiagonalizable {
  double sigma1 = 0.0; // larger eigenvalue
  double sigma2 = 0.0; // smaller eigenvalue
  Vec2 v1{};           // unit eigenvector for sigma1
  Vec2 v2{};           // unit eigenvector for sigma2
  bool scalar = false; // M == sigma * I; basis is the standard one
};

struct Defective {
  double sigma = 0.0; // the repeated eigenvalue
  Vec2 v1{};          // unit eigenvector
  Vec2 v2{};          // generalized eigenvector, (M - sigma*I) v2 = v1, orthogonal to v1
};

struct ComplexPair {
  double h = 0.0;   // modulus of the eigenvalue pair
  double phi = 0.0; // argument of the chosen eigenvalue, in (0, pi)
  Vec2 re_v{};      // real part of the eigenvector, ||re_v|| == ||im_v||
  Vec2 im_v{};      // imaginary part
  double gamma = 0.0; // angle between re_v and im_v, in (0, pi)
};

using SpectralData = std::variant<RealDiagonalizable, Defective, ComplexPair>;

// Coordinates of a seed vector in the eigen (or Jordan) basis.  For the
// complex variant the pair is (mu, conj(mu)) and only mu is stored.
struct SeedCoordinates {
  double mu1 = 0.0;
  double mu2 = 0.0;
  std::complex<double> mu{0.0, 0.0};
  bool is_complex = false;
};

SpectralData decompose(const Mat2& m);

SeedCoordinates seed_coordinates(const SpectralData& spectral, Vec2 w);

// (1-t) I + t M; its eigenvalues are 1 - t + t*sigma_k.
Mat2 subdivision_matrix(const Mat2& m, double t);

// M T^{-1}, the generator of the trailing subarc; eigenvalues sigma_k / sigma_k(t).
Mat2 right_quotient_matrix(const Mat2& m, double t);

std::array<double, 2> singular_values(const Mat2& m);
std::array<double, 3> singular_values(const Mat3& m);

// Symmetric eigen-solve helpers (ascending order not guaranteed; results sorted descending).
std::array<double, 2> symmetric_eigenvalues(const Mat2& symmetric);
std::array<double, 3> symmetric_eigenvalues(const Mat3& symmetric);

double angle_between(Vec2 u, Vec2 v);
double angle_between(Vec3 u, Vec3 v);

} // namespace classa
