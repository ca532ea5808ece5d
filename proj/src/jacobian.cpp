#include "schlafli/jacobian.hpp"

#include "kernels.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>

namespace schlafli {
namespace {

detail::Solution<double> to_kernel(const TetraSolution& sol) {
  detail::Solution<double> out;
  out.geometry = sol.lengths.geometry;
  for (int v = 0; v < 4; ++v) {
    out.face_lengths[v] = sol.faces[v].triangle.lengths;
    out.face_angles[v] = sol.faces[v].triangle.angles;
    out.link_sides[v] = sol.links[v].triangle.lengths;
    out.link_angles[v] = sol.links[v].triangle.angles;
  }
  out.dihedral = sol.angles.a;
  return out;
}

void check_nondegenerate(const TetraSolution& sol, const Tolerances& tol) {
  for (int v = 0; v < 4; ++v) {
    const double face_a = a_invariant(sol.faces[v].triangle);
    const double link_a = a_invariant(sol.links[v].triangle);
    if (!(face_a >= tol.min_sine) || !(link_a >= tol.min_sine)) {
      std::ostringstream os;
      os << "A-invariant below " << tol.min_sine << " (face omitting vertex " << v + 1 << ": " << face_a
         << ", link of vertex " << v + 1 << ": " << link_a << ")";
      throw GeometryError(ErrorKind::NearDegenerate, os.str());
    }
  }
}

double checked_nonzero(double value, const Tolerances& tol, const char* what) {
  if (!(std::abs(value) >= tol.min_sine)) {
    std::ostringstream os;
    os << what << " below " << tol.min_sine << ": " << value;
    throw GeometryError(ErrorKind::NearDegenerate, os.str());
  }
  return value;
}

double checked_sine(double angle, const Tolerances& tol) {
  return checked_nonzero(std::sin(angle), tol, "sine of dihedral angle");
}

}  // namespace

std::string_view to_string(AssemblyMode mode) { return mode == AssemblyMode::Direct ? "direct" : "minimal"; }

AssemblyMode parse_assembly_mode(std::string_view name) {
  if (name == "direct") return AssemblyMode::Direct;
  if (name == "minimal") return AssemblyMode::Minimal;
  throw std::invalid_argument("unknown assembly mode '" + std::string(name) + "' (expected direct or minimal)");
}

double dangle_dlength_via_link(const TetraSolution& sol, int v, int w, int rs) {
  if (v < 0 || v > 3 || w < 0 || w > 3 || v == w || rs < 0 || rs >= kEdgeCount) {
    throw std::out_of_range("dangle_dlength_via_link needs distinct vertices and an edge index in 0..5");
  }
  return detail::chain_rule(to_kernel(sol), v, w, rs);
}

JacobianMatrix jacobian_analytic(const TetraLengths& x, AssemblyMode mode, const Tolerances& tol) {
  return jacobian_analytic(solve_tetra(x, tol), mode, tol);
}

JacobianMatrix jacobian_analytic(const TetraSolution& sol, AssemblyMode mode, const Tolerances& tol) {
  check_nondegenerate(sol, tol);
  for (int e = 0; e < kEdgeCount; ++e) checked_sine(sol.angles.a[e], tol);
  return {sol.lengths.geometry, detail::assemble(to_kernel(sol), mode)};
}

JacobianMatrix jacobian_fd(const TetraLengths& x, double h, const Tolerances& tol) {
  JacobianMatrix jac;
  jac.geometry = x.geometry;
  for (int col = 0; col < kEdgeCount; ++col) {
    TetraLengths plus = x;
    TetraLengths minus = x;
    plus.x[col] += h;
    minus.x[col] -= h;
    TetraAngles a_plus;
    TetraAngles a_minus;
    try {
      a_plus = curvature_map(plus, tol);
      a_minus = curvature_map(minus, tol);
    } catch (const GeometryError& err) {
      throw GeometryError(ErrorKind::InvalidTetrahedron,
                          "perturbing edge " + edge_key(col) + " leaves the valid region: " + err.what());
    }
    for (int row = 0; row < kEdgeCount; ++row) {
      jac.values(row, col) = (a_plus.a[row] - a_minus.a[row]) / (2.0 * h);
    }
  }
  return jac;
}

PMatrix p_matrix(const TetraLengths& x, const Tolerances& tol) {
  const TetraSolution sol = solve_tetra(x, tol);
  return p_matrix(jacobian_analytic(sol, AssemblyMode::Direct, tol), sol.angles, tol);
}

PMatrix p_matrix(const JacobianMatrix& jacobian, const TetraAngles& angles, const Tolerances& tol) {
  Eigen::Matrix<double, kEdgeCount, 1> inv_sine;
  for (int e = 0; e < kEdgeCount; ++e) inv_sine[e] = 1.0 / checked_sine(angles.a[e], tol);
  PMatrix p;
  p.geometry = jacobian.geometry;
  p.values = inv_sine.asDiagonal() * jacobian.values * inv_sine.asDiagonal();
  return p;
}

double w_angle(const TetraAngles& a, int edge, const Tolerances& tol) {
  if (edge < 0 || edge >= kEdgeCount) throw std::out_of_range("edge index must be in 0..5");
  checked_sine(a.a[edge], tol);
  return detail::w_angle(a.a, edge);
}

RMatrix r_matrix(const TetraLengths& x, const Tolerances& tol) {
  if (!is_curved(x.geometry)) {
    throw GeometryError(ErrorKind::WrongGeometry, "R-matrix requires curved geometry");
  }
  // Validates x and the degeneracy guards in double precision.
  const JacobianMatrix jacobian = jacobian_analytic(x, AssemblyMode::Direct, tol);

  RMatrix r;
  r.geometry = x.geometry;
  const Eigen::JacobiSVD<Matrix6> svd(jacobian.values);
  const auto& sv = svd.singularValues();
  r.condition = sv[kEdgeCount - 1] > 0.0 ? sv[0] / sv[kEdgeCount - 1] : std::numeric_limits<double>::infinity();
  if (!(r.condition < 1.0 / (64.0 * std::numeric_limits<double>::epsilon()))) {
    std::ostringstream os;
    os << "Jacobian is numerically singular (condition estimate " << r.condition << ")";
    throw GeometryError(ErrorKind::SingularJacobian, os.str());
  }

  // The inversion amplifies the rounding error of J by its condition number,
  // so J is rebuilt and inverted in extended precision.
  using Extended = long double;
  using MatrixX6 = Eigen::Matrix<Extended, kEdgeCount, kEdgeCount>;
  std::array<Extended, kEdgeCount> xe{};
  for (int e = 0; e < kEdgeCount; ++e) xe[e] = x.x[e];
  const MatrixX6 inverse =
      Eigen::FullPivLU<MatrixX6>(detail::assemble(detail::solve_tetra(xe, x.geometry), AssemblyMode::Direct))
          .inverse();

  Eigen::Matrix<Extended, kEdgeCount, 1> inv_s;
  for (int e = 0; e < kEdgeCount; ++e) {
    checked_nonzero(s_lambda(x.x[e], x.geometry), tol, "S(edge length)");
    inv_s[e] = 1 / detail::s_lambda(xe[e], x.geometry);
  }
  const Extended lambda = curvature(x.geometry);
  r.inverse_jacobian = inverse.cast<double>();
  r.values = (lambda * (inv_s.asDiagonal() * inverse * inv_s.asDiagonal())).cast<double>();
  return r;
}

double w_length(const TetraLengths& x, int edge, const Tolerances& tol) {
  if (!is_curved(x.geometry)) {
    throw GeometryError(ErrorKind::WrongGeometry, "length coefficient w requires curved geometry");
  }
  const auto [i, j] = kEdges.at(static_cast<std::size_t>(edge));
  const auto [k, l] = kEdges[opposite_edge(edge)];
  const auto c = [&](int p, int q) { return c_lambda(x(p, q), x.geometry); };
  const double s = checked_nonzero(s_lambda(x.x[edge], x.geometry), tol, "S(edge length)");
  const double numerator =
      -c(i, j) * c(i, k) * c(i, l) - c(j, i) * c(j, k) * c(j, l) + c(i, k) * c(j, l) + c(i, l) * c(j, k);
  return numerator / (curvature(x.geometry) * s * s);
}

double max_relative_error(const Matrix6& analytic, const Matrix6& reference) {
  const double floor = 1e-3 * reference.cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (int r = 0; r < kEdgeCount; ++r) {
    for (int c = 0; c < kEdgeCount; ++c) {
      const double denom = std::max(std::abs(reference(r, c)), floor);
      if (denom > 0.0) worst = std::max(worst, std::abs(analytic(r, c) - reference(r, c)) / denom);
    }
  }
  return worst;
}

}  // namespace schlafli
