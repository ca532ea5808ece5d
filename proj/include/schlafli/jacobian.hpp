#pragma once

#include <Eigen/Core>

#include "schlafli/tetra.hpp"

namespace schlafli {

using Matrix6 = Eigen::Matrix<double, kEdgeCount, kEdgeCount>;

/// How jacobian_analytic produces its 36 entries.
enum class AssemblyMode {
  /// Every entry by its own chain rule through one vertex link.
  Direct,
  /// Opposite-edge entries by the chain rule; adjacent and diagonal entries
  /// from the closed-form relations to them.
  Minimal,
};

std::string_view to_string(AssemblyMode mode);
AssemblyMode parse_assembly_mode(std::string_view name);

/// values(row, col) = d a_row / d x_col in canonical edge order.
struct JacobianMatrix {
  Geometry geometry = Geometry::Euclidean;
  Matrix6 values = Matrix6::Zero();
};

/// values(ij, rs) = (d a_ij / d x_rs) / (sin a_ij sin a_rs).
struct PMatrix {
  Geometry geometry = Geometry::Euclidean;
  Matrix6 values = Matrix6::Zero();
};

/// values(ij, rs) = lambda (d x_ij / d a_rs) / (S(x_ij) S(x_rs)), the real
/// form of 1 / (sin(sqrt(lambda) x_ij) sin(sqrt(lambda) x_rs)) for both
/// curvatures. `inverse_jacobian` holds d x / d a; `condition` is the 2-norm
/// condition number of the Jacobian.
struct RMatrix {
  Geometry geometry = Geometry::Spherical;
  Matrix6 values = Matrix6::Zero();
  Matrix6 inverse_jacobian = Matrix6::Zero();
  double condition = 0.0;
};

/// d a_vw / d x_rs by the chain rule through the link at v: the sum over
/// the three link sides b of (d a_vw / d b)(d b / d x_rs), each factor from
/// the triangle derivative formulas. Any valid (v, w, rs) is accepted, so
/// the same entry can be cross-checked through the link at w.
double dangle_dlength_via_link(const TetraSolution& sol, int v, int w, int rs);

/// Throws GeometryError(NearDegenerate) when a face or link A-invariant is
/// below tol.min_sine, GeometryError(InvalidTetrahedron) for invalid x.
JacobianMatrix jacobian_analytic(const TetraLengths& x, AssemblyMode mode = AssemblyMode::Direct,
                                 const Tolerances& tol = {});
JacobianMatrix jacobian_analytic(const TetraSolution& sol, AssemblyMode mode = AssemblyMode::Direct,
                                 const Tolerances& tol = {});

/// Central differences of curvature_map with step h. Throws
/// GeometryError(InvalidTetrahedron) if a perturbed tetrahedron is invalid.
JacobianMatrix jacobian_fd(const TetraLengths& x, double h, const Tolerances& tol = {});

PMatrix p_matrix(const TetraLengths& x, const Tolerances& tol = {});
PMatrix p_matrix(const JacobianMatrix& jacobian, const TetraAngles& angles, const Tolerances& tol = {});

/// (c_ij c_jk c_ki + c_ij c_jl c_li + c_ik c_jl + c_il c_jk) / sin^2 a_ij, c = cos a.
double w_angle(const TetraAngles& a, int edge, const Tolerances& tol = {});

/// Inverts the direct-mode analytic Jacobian; assembly and inversion run in
/// long double. Throws GeometryError(WrongGeometry) for Euclidean input and
/// GeometryError(SingularJacobian) when the condition number exceeds
/// 1 / (64 eps).
RMatrix r_matrix(const TetraLengths& x, const Tolerances& tol = {});

/// (-c_ij c_ik c_il - c_ji c_jk c_jl + c_ik c_jl + c_il c_jk) / (lambda S(x_ij)^2),
/// c = C(x).
double w_length(const TetraLengths& x, int edge, const Tolerances& tol = {});

/// Largest entrywise |analytic - reference| / max(|reference|, 1e-3 max|reference|).
/// The floor keeps structurally zero entries from dominating.
double max_relative_error(const Matrix6& analytic, const Matrix6& reference);

}  // namespace schlafli
