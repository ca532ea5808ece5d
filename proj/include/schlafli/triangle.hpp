#pragma once

#include <array>

#include "schlafli/geometry.hpp"
#include "schlafli/tolerances.hpp"

namespace schlafli {

/// A geodesic triangle in a constant-curvature plane. angles[i] is the inner
/// angle opposite lengths[i]. Lengths are radians on the unit sphere.
struct TriangleData {
  std::array<double, 3> lengths{};
  std::array<double, 3> angles{};
  Geometry geometry = Geometry::Euclidean;
};

/// Solves the cosine law for the three angles.
///
/// Angles are extracted from the half-angle form of the cosine law,
///   tan^2(a_i / 2) = S(s - l_j) S(s - l_k) / (S(s) S(s - l_i)),  s = half perimeter,
/// which stays accurate for small and thin triangles where the plain cosine
/// ratio loses digits to cancellation.
///
/// Throws GeometryError(InvalidTriangle) if a length is not positive, the
/// strict triangle inequality fails or (spherical) the perimeter reaches 2*pi;
/// GeometryError(NearDegenerate) if an angle is within
/// `tol.degenerate_angle` of 0 or pi.
TriangleData solve_angles(double l1, double l2, double l3, Geometry g, const Tolerances& tol = {});
TriangleData solve_angles(const std::array<double, 3>& lengths, Geometry g, const Tolerances& tol = {});

/// sin(a_i) * S(l_j) * S(l_k). The value does not depend on i.
double a_invariant(const TriangleData& t, int i = 0);

/// Largest |S(l_i) sin(a_j) - S(l_j) sin(a_i)| relative to the larger term.
double sine_law_residual(const TriangleData& t);

/// Partial derivative of angle i with respect to length j (0-based indices).
///   d a_i / d l_i = S(l_i) / A
///   d a_i / d l_j = -(d a_i / d l_i) cos(a_k),  {i, j, k} = {0, 1, 2}
double dangle_dlength(const TriangleData& t, int i, int j);

}  // namespace schlafli
