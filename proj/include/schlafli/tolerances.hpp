#pragma once

namespace schlafli {

/// Numerical guards shared by the triangle, tetrahedron and Jacobian kernels.
struct Tolerances {
  /// Angles closer than this to 0 or pi are rejected as near-degenerate.
  double degenerate_angle = 1e-9;
  /// Smallest admissible A-invariant and sine of a dihedral angle or length.
  double min_sine = 1e-12;
  /// Allowed disagreement between the two links that both produce a_ij.
  double link_consistency = 1e-9;
};

}  // namespace schlafli
