#include "classa/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "classa/error.hpp"

namespace classa {

namespace {

// Deterministic sign fix: first component larger than tol in magnitude is made positive.
Vec2 fix_sign(Vec2 v, double tol = 1e-12) {
  if (v.x < -tol || (std::abs(v.x) <= tol && v.y < 0.0)) return -v;
  return v;
}

Vec2 normalized(Vec2 v) {
  const double n = v.norm();
  return {v.x / n, v.y / n};
}

// Unit kernel vector of a rank-one 2x2 matrix, taken from its larger row.
Vec2 kernel_vector(const Mat2& a) {
  const Vec2 r1{a.a11, a.a12};
  const Vec2 r2{a.a21, a.a22};
  const Vec2 r = (r1.norm2() >= r2.norm2()) ? r1 : r2;
  return fix_sign(normalized({r.y, -r.x}));
}

} // namespace

SpectralData decompose(const Mat2& m) {
  const double tr = m.trace();
  const double dt = m.det();
  const double disc = tr * tr - 4.0 * dt;
  const double disc_tol = 1e-10 * std::max(1.0, tr * tr);

  if (disc > disc_tol) {
    // Two distinct real eigenvalues.  The larger-in-value one is sigma1.
    const double root = std::sqrt(disc);
    const double sigma1 = (tr + root) / 2.0;
    const double sigma2 = (tr - root) / 2.0;
    const auto eigenvector = [&m](double sigma) {
      return kernel_vector({m.a11 - sigma, m.a12, m.a21, m.a22 - sigma});
    };
    return RealDiagonalizable{sigma1, sigma2, eigenvector(sigma1), eigenvector(sigma2), false};
  }

  if (disc < -disc_tol) {
    // Conjugate pair h e^{+-i phi}; we keep the one with positive argument.
    const double re = tr / 2.0;
    const double im = std::sqrt(-disc) / 2.0;
    const double h = std::hypot(re, im);
    const double phi = std::atan2(im, re);

    // Kernel of (M - sigma I): both off-diagonal entries are nonzero when the
    // eigenvalues are non-real, so either row yields an eigenvector.
    const std::complex<double> sigma{re, im};
    std::complex<double> ux, uy;
    if (std::abs(m.a12) >= std::abs(m.a21)) {
      ux = {m.a12, 0.0};
      uy = sigma - std::complex<double>{m.a11, 0.0};
    } else {
      ux = sigma - std::complex<double>{m.a22, 0.0};
      uy = {m.a21, 0.0};
    }

    // Rotate the eigenvector by a unit phase so that the real and imaginary
    // parts have equal norms: pick psi with Re(e^{2 i psi} (u.u)) = 0, i.e.
    // 2 psi = pi/2 - arg(u.u), which sends the bilinear square u.u to +i|u.u|.
    const std::complex<double> uu = ux * ux + uy * uy;
    if (std::abs(uu) > 1e-14 * (std::norm(ux) + std::norm(uy))) {
      const double psi = (M_PI / 2.0 - std::arg(uu)) / 2.0;
      const std::complex<double> rot = std::polar(1.0, psi);
      ux *= rot;
      uy *= rot;
    }

    Vec2 re_v{ux.real(), uy.real()};
    Vec2 im_v{ux.imag(), uy.imag()};
    const double scale = std::sqrt(re_v.norm() * im_v.norm());
    re_v = re_v / scale;
    im_v = im_v / scale;
    // Deterministic orientation of the pair.
    if (re_v.x < -1e-12 || (std::abs(re_v.x) <= 1e-12 && re_v.y < 0.0)) {
      re_v = -re_v;
      im_v = -im_v;
    }
    const double gamma = angle_between(re_v, im_v);
    return ComplexPair{h, phi, re_v, im_v, gamma};
  }

  // Repeated eigenvalue.
  const double sigma = tr / 2.0;
  const Mat2 a{m.a11 - sigma, m.a12, m.a21, m.a22 - sigma};
  if (a.max_abs() <= 1e-12 * (1.0 + m.max_abs())) {
    // Scalar multiple of the identity: geometric multiplicity two, every
    // curve it generates is a line segment.
    return RealDiagonalizable{sigma, sigma, {1.0, 0.0}, {0.0, 1.0}, true};
  }

  // Jordan block.  v1 spans ker(M - sigma I); v2 solves (M - sigma I) v2 = v1
  // and is projected orthogonal to v1 (adding multiples of v1 keeps the
  // equation satisfied).  The trial vector is chosen by alignment of its
  // image with v1, which also survives near-repeated symmetric inputs.
  const Vec2 v1 = kernel_vector(a);
  const Vec2 au1 = a.apply({1.0, 0.0});
  const Vec2 au2 = a.apply({0.0, 1.0});
  Vec2 u, au;
  if (std::abs(au1.dot(v1)) >= std::abs(au2.dot(v1))) {
    u = {1.0, 0.0};
    au = au1;
  } else {
    u = {0.0, 1.0};
    au = au2;
  }
  const double c = au.dot(v1); // a u = c v1, c != 0 because u is not in the kernel
  Vec2 v2 = u / c;
  v2 = v2 - v1 * v2.dot(v1);
  return Defective{sigma, v1, v2};
}

SeedCoordinates seed_coordinates(const SpectralData& spectral, Vec2 w) {
  if (w.norm() == 0.0) fail(Errc::ZeroSeed, "seed_coordinates: zero seed vector");

  SeedCoordinates out;
  if (const auto* cp = std::get_if<ComplexPair>(&spectral)) {
    // w = mu v + conj(mu v) = 2 Re(mu) re_v - 2 Im(mu) im_v.
    const double d = det(cp->re_v, cp->im_v);
    const double alpha = det(w, cp->im_v) / d;  // coordinate along re_v
    const double beta = det(cp->re_v, w) / d;   // coordinate along im_v
    out.mu = {alpha / 2.0, -beta / 2.0};
    out.is_complex = true;
    return out;
  }

  Vec2 v1, v2;
  if (const auto* rd = std::get_if<RealDiagonalizable>(&spectral)) {
    v1 = rd->v1;
    v2 = rd->v2;
  } else {
    const auto& j = std::get<Defective>(spectral);
    v1 = j.v1;
    v2 = j.v2;
  }
  const double d = det(v1, v2);
  out.mu1 = det(w, v2) / d;
  out.mu2 = det(v1, w) / d;
  return out;
}

Mat2 subdivision_matrix(const Mat2& m, double t) {
  return {1.0 - t + t * m.a11, t * m.a12, t * m.a21, 1.0 - t + t * m.a22};
}

Mat2 right_quotient_matrix(const Mat2& m, double t) {
  const Mat2 T = subdivision_matrix(m, t);
  const double d = T.det();
  const double scale = std::max(1.0, T.max_abs() * T.max_abs());
  if (std::abs(d) <= 1e-14 * scale)
    fail(Errc::SingularSubdivision, "right_quotient_matrix: subdivision matrix is singular");
  const Mat2 inv{T.a22 / d, -T.a12 / d, -T.a21 / d, T.a11 / d};
  return m * inv;
}

std::array<double, 2> symmetric_eigenvalues(const Mat2& s) {
  const double mean = (s.a11 + s.a22) / 2.0;
  const double off = (s.a12 + s.a21) / 2.0;
  const double r = std::hypot((s.a11 - s.a22) / 2.0, off);
  return {mean + r, mean - r};
}

std::array<double, 3> symmetric_eigenvalues(const Mat3& s) {
  // Cyclic Jacobi sweeps; plenty at size three.
  Mat3 a = s;
  double off_norm = 0.0;
  const auto off = [&a]() {
    return std::sqrt(a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2));
  };
  double scale = 0.0;
  for (double v : a.m) scale += v * v;
  scale = std::sqrt(scale);
  const double target = 1e-13 * std::max(scale, 1e-300);

  for (int sweep = 0; sweep < 30; ++sweep) {
    off_norm = off();
    if (off_norm <= target) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        // Apply the rotation on rows/columns p and q.
        Mat3 r = Mat3::identity();
        r(p, p) = c;
        r(q, q) = c;
        r(p, q) = sn;
        r(q, p) = -sn;
        a = r.transpose() * a * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

std::array<double, 2> singular_values(const Mat2& m) {
  const Mat2 mtm = m.transpose() * m;
  auto ev = symmetric_eigenvalues(mtm);
  const double s1 = std::sqrt(std::max(ev[0], 0.0));
  // The smaller value through the exact product keeps sigma1*sigma2 == |det M|.
  const double s2 = (s1 > 0.0) ? std::abs(m.det()) / s1 : 0.0;
  return {s1, s2};
}

std::array<double, 3> singular_values(const Mat3& m) {
  auto ev = symmetric_eigenvalues(m.transpose() * m);
  return {std::sqrt(std::max(ev[0], 0.0)), std::sqrt(std::max(ev[1], 0.0)),
          std::sqrt(std::max(ev[2], 0.0))};
}

double angle_between(Vec2 u, Vec2 v) {
  const double nu = u.norm(), nv = v.norm();
  if (nu == 0.0 || nv == 0.0) fail(Errc::ZeroVector, "angle_between: zero vector");
  const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
  return std::acos(c);
}

double angle_between(Vec3 u, Vec3 v) {
  const double nu = u.norm(), nv = v.norm();
  if (nu == 0.0 || nv == 0.0) fail(Errc::ZeroVector, "angle_between: zero vector");
  const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
  return std::acos(c);
}

} // namespace classa
