#pragma once

// Test-side oracles and generators.  Everything here is independent of the
// library's evaluation paths: subdivision by the raw triangle scheme, point
// evaluation by direct Bernstein sums, derivatives by central differences.

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "classa/curve.hpp"
#include "classa/curvature_model.hpp"
#include "classa/document.hpp"

namespace oracle {

using classa::ControlPolygon;
using classa::CurveSpec;
using classa::Mat2;
using classa::Vec2;

inline std::pair<ControlPolygon, ControlPolygon> de_casteljau_split(const ControlPolygon& poly,
                                                                    double t) {
  const size_t n = poly.size() - 1;
  std::vector<ControlPolygon> stages{poly};
  for (size_t k = 1; k <= n; ++k) {
    const ControlPolygon& prev = stages.back();
    ControlPolygon stage(prev.size() - 1);
    for (size_t j = 0; j + 1 < prev.size(); ++j)
      stage[j] = prev[j] * (1.0 - t) + prev[j + 1] * t;
    stages.push_back(std::move(stage));
  }
  ControlPolygon left(n + 1), right(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    left[k] = stages[k].front();
    right[k] = stages[n - k][k];
  }
  return {left, right};
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Vec2 bernstein_eval(const ControlPolygon& poly, double t) {
  const int n = static_cast<int>(poly.size()) - 1;
  Vec2 p{};
  for (int j = 0; j <= n; ++j) {
    const double basis = binomial(n, j) * std::pow(t, j) * std::pow(1.0 - t, n - j);
    p = p + poly[static_cast<size_t>(j)] * basis;
  }
  return p;
}

// Central difference of the closed-form curvature, step 1e-6.
inline double dkappa_fd(const classa::CurvatureModel& model, double t, double step = 1e-6) {
  return (classa::kappa_closed(model, t + step) - classa::kappa_closed(model, t - step)) /
         (2.0 * step);
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  double sign() { return integer(0, 1) == 0 ? -1.0 : 1.0; }
  Vec2 unit() {
    const double a = uniform(0.0, 2.0 * M_PI);
    return {std::cos(a), std::sin(a)};
  }
};

// Random spec with two distinct positive real eigenvalues and a seed that is
// not close to either eigenvector.
inline CurveSpec random_real_spec(Rng& rng) {
  const double sigma1 = rng.uniform(0.6, 3.0);
  const double sigma2 = rng.uniform(0.2, sigma1 - 0.15);
  const double a1 = rng.uniform(0.0, 2.0 * M_PI);
  const double a2 = a1 + rng.sign() * rng.uniform(0.35, M_PI - 0.35);
  const Vec2 v1{std::cos(a1), std::sin(a1)};
  const Vec2 v2{std::cos(a2), std::sin(a2)};
  const double d = classa::det(v1, v2);
  // M = P diag(sigma) P^{-1} with P = [v1 v2].
  const Mat2 p{v1.x, v2.x, v1.y, v2.y};
  const Mat2 diag{sigma1, 0.0, 0.0, sigma2};
  const Mat2 pinv{v2.y / d, -v2.x / d, -v1.y / d, v1.x / d};
  CurveSpec spec;
  spec.generator = p * diag * pinv;
  const double mu1 = rng.sign() * rng.uniform(0.25, 2.0);
  const double mu2 = rng.sign() * rng.uniform(0.25, 2.0);
  spec.seed = v1 * mu1 + v2 * mu2;
  spec.degree = rng.integer(2, 8);
  return spec;
}

inline CurveSpec random_jordan_spec(Rng& rng) {
  const double sigma = rng.uniform(0.3, 2.5);
  const Vec2 v1 = rng.unit();
  const Vec2 perp{-v1.y, v1.x};
  const Vec2 v2 = perp * rng.uniform(0.3, 2.0);
  // A v1 = 0, A v2 = v1  =>  A = v1 (v2 / ||v2||^2)^T.
  const double n2 = v2.norm2();
  const Mat2 nil{v1.x * v2.x / n2, v1.x * v2.y / n2, v1.y * v2.x / n2, v1.y * v2.y / n2};
  CurveSpec spec;
  spec.generator = Mat2{sigma, 0, 0, sigma} + nil;
  const double mu1 = rng.sign() * rng.uniform(0.0, 2.0);
  const double mu2 = rng.sign() * rng.uniform(0.25, 2.0);
  spec.seed = v1 * mu1 + v2 * mu2;
  spec.degree = rng.integer(2, 8);
  return spec;
}

inline CurveSpec random_complex_spec(Rng& rng) {
  const double h = rng.uniform(0.4, 3.0);
  const double phi = rng.sign() * rng.uniform(0.15, 2.8);
  const double gamma = rng.uniform(0.25, M_PI - 0.25);
  CurveSpec spec;
  spec.generator = classa::matrix_from_eigen_form(h, phi, gamma);
  spec.seed = rng.unit() * rng.uniform(0.4, 3.0);
  spec.degree = rng.integer(2, 8);
  return spec;
}

} // namespace oracle
