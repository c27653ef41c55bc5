#pragma once

#include <array>
#include <cmath>

namespace classa {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Signed area spanned by (a, b); the 2x2 determinant with a, b as columns.
inline double det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
  static Mat2 rotation_scaling(double h, double phi) {
    const double c = h * std::cos(phi), s = h * std::sin(phi);
    return {c, -s, s, c};
  }

  Vec2 apply(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
  Vec2 operator*(Vec2 v) const { return apply(v); }

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
  Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }

  double max_abs() const {
    return std::max(std::max(std::abs(a11), std::abs(a12)), std::max(std::abs(a21), std::abs(a22)));
  }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Vec3 embed(Vec2 v) { return {v.x, v.y, 0.0}; }

struct Mat3 {
  // row-major
  std::array<double, 9> m{};

  static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

  double operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }
  double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }

  Vec3 apply(Vec3 v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Vec3 operator*(Vec3 v) const { return apply(v); }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  double max_abs() const {
    double a = 0;
    for (double v : m) a = std::max(a, std::abs(v));
    return a;
  }

  static Mat3 from_mat2(const Mat2& m2) {
    return {{m2.a11, m2.a12, 0, m2.a21, m2.a22, 0, 0, 0, 1}};
  }
};

} // namespace classa
