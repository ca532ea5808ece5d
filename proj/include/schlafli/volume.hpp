#pragma once

#include "schlafli/jacobian.hpp"

namespace schlafli {

struct VolumeResult {
  double value = 0.0;
  int n_steps = 0;
  /// Richardson estimate |V(n) - V(n/2)| / 3 of the quadrature error.
  double error_estimate = 0.0;
};

/// Integral of (lambda / 2) sum_ij x_ij da_ij along the straight segment
/// from `from` to `to`, composite midpoint rule with n_steps panels and da
/// from the analytic Jacobian. `from` may be the zero vector (the base point
/// of the volume); the rule never evaluates the endpoints.
double schlaefli_line_integral(const EdgeVector& from, const EdgeVector& to, Geometry g, int n_steps);

/// Richardson-extrapolated scaling-path volume, V(n) + (V(n) - V(n/2)) / 3.
/// Fourth order in 1/n; used where volume differences must be smooth in x.
double extrapolated_volume(const EdgeVector& x, Geometry g, int n_steps);

/// Volume of a spherical or hyperbolic tetrahedron, integrating the
/// Schlaefli 1-form along x(t) = t x for t in (0, 1] with V(0) = 0.
///
/// Throws GeometryError(WrongGeometry) for Euclidean input,
/// GeometryError(InvalidTetrahedron) if the path leaves the valid region and
/// std::invalid_argument unless n_steps is even and >= 2.
VolumeResult volume_schlaefli(const TetraLengths& x, int n_steps = 4096);

/// Same volume along 0 -> waypoint (scaling) then waypoint -> x (straight
/// segment); agrees with volume_schlaefli because the form is closed.
VolumeResult volume_two_segment(const TetraLengths& x, const EdgeVector& waypoint, int n_steps = 4096);

struct GradientCheck {
  /// max over the six coordinates of |dV - (lambda/2) sum x_ij da_ij|.
  double max_residual = 0.0;
  /// max_residual / h^2; stays bounded as h shrinks when the formula holds.
  double normalized = 0.0;
  /// dV has the sign of (lambda/2) sum x_ij da_ij for every coordinate whose
  /// predicted change is at least a tenth of the largest one.
  bool sign_consistent = true;
};

/// Forward-perturbs each length by h, recomputes V (extrapolated) and the
/// angles and compares the volume change with the Schlaefli prediction at
/// the base point. The mismatch is O(h^2).
GradientCheck volume_gradient_check(const TetraLengths& x, double h, int n_steps = 1024);

/// The gradient check at h and 2h. Passes when the residual shrinks at
/// least second order (coarse / fine >= 3.5) or is already below 1e-10, and
/// every volume change has the predicted sign.
struct GradientConvergence {
  double h = 0.0;
  GradientCheck fine;
  GradientCheck coarse;
  double ratio = 0.0;
  bool pass = false;
};

GradientConvergence volume_gradient_convergence(const TetraLengths& x, double h, int n_steps = 1024);

/// Euclidean volume from the Cayley-Menger determinant, 288 V^2 = det CM.
/// Throws GeometryError(WrongGeometry) for curved input and
/// GeometryError(InvalidTetrahedron) when the determinant is not positive.
double euclidean_volume_cm(const TetraLengths& x);

}  // namespace schlafli
