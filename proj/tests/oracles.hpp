#pragma once

// Reference computations that share no code with the library: plain cosine
// laws, the vertex Gram matrix, explicit coordinates and a cofactor-expanded
// Cayley-Menger determinant.

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "schlafli/geometry.hpp"

namespace oracle {

using Edges = std::array<double, 6>;

inline constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Angle opposite side a of a triangle with sides a, b, c.
inline double triangle_angle(double a, double b, double c, schlafli::Geometry g) {
  switch (g) {
    case schlafli::Geometry::Spherical:
      return std::acos((std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c)));
    case schlafli::Geometry::Hyperbolic:
      return std::acos((std::cosh(b) * std::cosh(c) - std::cosh(a)) / (std::sinh(b) * std::sinh(c)));
    default:
      return std::acos((b * b + c * c - a * a) / (2 * b * c));
  }
}

// Dihedral angles from the inverse of the vertex Gram matrix (curved) or from
// face normals of an explicit embedding (flat).
inline Edges euclidean_dihedrals(const Edges& x) {
  auto d2 = [&](int i, int j) {
    for (int e = 0; e < 6; ++e)
      if ((kPairs[e][0] == i && kPairs[e][1] == j) || (kPairs[e][0] == j && kPairs[e][1] == i)) return x[e] * x[e];
    return 0.0;
  };
  // Place p0 at the origin and solve for the rest from the distance table.
  Eigen::Vector3d p[4];
  p[0].setZero();
  p[1] = {std::sqrt(d2(0, 1)), 0, 0};
  const double px = (d2(0, 2) - d2(1, 2) + d2(0, 1)) / (2 * p[1].x());
  p[2] = {px, std::sqrt(d2(0, 2) - px * px), 0};
  const double qx = (d2(0, 3) - d2(1, 3) + d2(0, 1)) / (2 * p[1].x());
  const double qy = (d2(0, 3) - d2(2, 3) + p[2].squaredNorm() - 2 * qx * p[2].x()) / (2 * p[2].y());
  p[3] = {qx, qy, std::sqrt(d2(0, 3) - qx * qx - qy * qy)};

  Edges a{};
  for (int e = 0; e < 6; ++e) {
    const int i = kPairs[e][0], j = kPairs[e][1];
    int k = -1, l = -1;
    for (int v = 0; v < 4; ++v)
      if (v != i && v != j) (k < 0 ? k : l) = v;
    const Eigen::Vector3d axis = (p[j] - p[i]).normalized();
    Eigen::Vector3d u = p[k] - p[i], w = p[l] - p[i];
    u -= u.dot(axis) * axis;
    w -= w.dot(axis) * axis;
    a[e] = std::acos(u.dot(w) / (u.norm() * w.norm()));
  }
  return a;
}

inline Edges dihedrals(const Edges& x, schlafli::Geometry g) {
  if (g == schlafli::Geometry::Euclidean) return euclidean_dihedrals(x);
  const double lambda = g == schlafli::Geometry::Spherical ? 1.0 : -1.0;
  Eigen::Matrix4d gram = Eigen::Matrix4d::Identity();
  for (int e = 0; e < 6; ++e) {
    const double c = lambda > 0 ? std::cos(x[e]) : std::cosh(x[e]);
    gram(kPairs[e][0], kPairs[e][1]) = gram(kPairs[e][1], kPairs[e][0]) = c;
  }
  const Eigen::Matrix4d inv = gram.inverse();
  Edges a{};
  for (int e = 0; e < 6; ++e) {
    const auto [k, l] = kPairs[5 - e];
    a[e] = std::acos(-lambda * inv(k, l) / std::sqrt(std::abs(inv(k, k) * inv(l, l))));
  }
  return a;
}

// Fourth-order central differences of the Gram oracle.
inline Eigen::Matrix<double, 6, 6> jacobian(const Edges& x, schlafli::Geometry g, double h = 5e-5) {
  Eigen::Matrix<double, 6, 6> j;
  for (int c = 0; c < 6; ++c) {
    auto at = [&](double t) {
      Edges y = x;
      y[c] += t;
      return dihedrals(y, g);
    };
    const Edges p1 = at(h), m1 = at(-h), p2 = at(2 * h), m2 = at(-2 * h);
    for (int r = 0; r < 6; ++r) j(r, c) = (8 * (p1[r] - m1[r]) - (p2[r] - m2[r])) / (12 * h);
  }
  return j;
}

inline double det_laplace(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  double sum = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index k = 0, mk = 0; k < n; ++k)
        if (k != c) minor(r - 1, mk++) = m(r, k);
    sum += (c % 2 ? -1.0 : 1.0) * m(0, c) * det_laplace(minor);
  }
  return sum;
}

inline double cayley_menger_volume(const Edges& x) {
  Eigen::MatrixXd cm = Eigen::MatrixXd::Ones(5, 5);
  cm(0, 0) = 0;
  for (int v = 1; v < 5; ++v) cm(v, v) = 0;
  for (int e = 0; e < 6; ++e) {
    const int i = kPairs[e][0] + 1, j = kPairs[e][1] + 1;
    cm(i, j) = cm(j, i) = x[e] * x[e];
  }
  return std::sqrt(det_laplace(cm) / 288.0);
}

}  // namespace oracle
