#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schlafli/jacobian.hpp"

namespace schlafli {

struct IdentityTolerances {
  /// Residual bound for the P-matrix (angle-normalized Jacobian) identities.
  double angle_identities = 1e-9;
  /// Residual bound for the R-matrix identities; inversion amplifies error.
  double length_identities = 1e-8;
  /// Bound on max |J J^-1 - I|.
  double inverse = 1e-8;
};

/// Worst residual of one identity. `row`/`col` are the edge indices of the
/// matrix entry on the left-hand side where the worst case occurred.
struct IdentityResidual {
  std::string name;
  double residual = 0.0;
  int row = 0;
  int col = 0;
  double tolerance = 0.0;
  bool pass = true;
};

struct IdentityReport {
  Geometry geometry = Geometry::Euclidean;
  /// "angle" (P-matrix identities) or "length" (R-matrix identities).
  std::string family;
  EdgeVector lengths{};
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> sample_index;
  std::vector<IdentityResidual> identities;
  bool pass = true;
};

/// Residuals of the five P-matrix identities, each a maximum over every
/// labelling of the vertices (i, j, k, l distinct):
///   p_symmetry          P^ij_rs = P^rs_ij
///   p_opposite          P^ij_kl = P^ik_jl = P^il_jk
///   p_adjacent          P^ij_ik = -P^ij_kl cos a_jk
///   p_diagonal          P^ij_ij = P^ij_kl w_ij
///   p_complement        P^ij_rs = P^i'j'_r's'  for {i,j} != {r,s}
/// Uses the direct-mode Jacobian. Valid in all three geometries.
IdentityReport verify_angle_identities(const TetraLengths& x, const IdentityTolerances& tol = {});

/// Residuals of the R-matrix identities (the length-side counterparts, with
/// r_adjacent R^ij_ik = R^ij_kl C(x_il) and r_diagonal using w_length) plus
/// "inverse", max |J J^-1 - I|. Throws GeometryError(WrongGeometry) for
/// Euclidean input.
IdentityReport verify_length_identities(const TetraLengths& x, const IdentityTolerances& tol = {});

/// Same checks on precomputed matrices.
IdentityReport check_angle_identities(const PMatrix& p, const TetraAngles& a, const IdentityTolerances& tol = {});
IdentityReport check_length_identities(const RMatrix& r, const JacobianMatrix& jacobian, const TetraLengths& x,
                                       const IdentityTolerances& tol = {});

/// |sum over panels of (x_k + x_{k+1})/2 . (a_{k+1} - a_k)| around the circle
/// x0 + radius (cos t e_first + sin t e_second) with n_steps panels. The
/// angles come from curvature_map only, so an antisymmetric part of the
/// Jacobian would show up at order radius^2; for the closed form the
/// residual is O(radius^3 / n_steps^2).
///
/// Throws GeometryError(InvalidTetrahedron) if the loop leaves the valid
/// region and std::invalid_argument for bad edges or n_steps < 3.
double one_form_loop_residual(const TetraLengths& x0, double radius, int first_edge, int second_edge, int n_steps,
                              const Tolerances& tol = {});

}  // namespace schlafli
