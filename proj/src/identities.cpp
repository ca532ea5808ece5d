#include "schlafli/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schlafli {
namespace {

using Labelling = std::array<int, 4>;

std::vector<Labelling> all_labellings() {
  std::vector<Labelling> out;
  Labelling p{0, 1, 2, 3};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<Labelling>& labellings() {
  static const std::vector<Labelling> all = all_labellings();
  return all;
}

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    item_.name = std::move(name);
    item_.tolerance = tolerance;
  }

  void observe(double residual, int row, int col) {
    if (nan_) return;
    if (std::isnan(residual)) {
      nan_ = true;
    } else if (seen_ && residual <= item_.residual) {
      return;
    }
    item_.residual = residual;
    item_.row = row;
    item_.col = col;
    seen_ = true;
  }

  IdentityResidual finish() {
    // NaN compares false, so it never passes.
    item_.pass = item_.residual <= item_.tolerance;
    return item_;
  }

 private:
  IdentityResidual item_;
  bool seen_ = false;
  bool nan_ = false;
};

// Identities shared by the P- and R-matrices: symmetry, equality of the
// opposite-edge entries and the complement relation.
void check_shared(const Matrix6& m, const std::string& prefix, double tol, std::vector<IdentityResidual>& out) {
  Tracker symmetry(prefix + "_symmetry", tol);
  for (int e = 0; e < kEdgeCount; ++e) {
    for (int f = 0; f < kEdgeCount; ++f) symmetry.observe(std::abs(m(e, f) - m(f, e)), e, f);
  }
  out.push_back(symmetry.finish());

  Tracker opposite(prefix + "_opposite", tol);
  for (const auto& [i, j, k, l] : labellings()) {
    const int ij = edge_index(i, j);
    const int kl = edge_index(k, l);
    const double ref = m(ij, kl);
    opposite.observe(std::abs(ref - m(edge_index(i, k), edge_index(j, l))), ij, kl);
    opposite.observe(std::abs(ref - m(edge_index(i, l), edge_index(j, k))), ij, kl);
  }
  out.push_back(opposite.finish());
}

void check_complement(const Matrix6& m, const std::string& prefix, double tol, std::vector<IdentityResidual>& out) {
  Tracker complement(prefix + "_complement", tol);
  for (int e = 0; e < kEdgeCount; ++e) {
    for (int f = 0; f < kEdgeCount; ++f) {
      if (e == f) continue;
      complement.observe(std::abs(m(e, f) - m(opposite_edge(e), opposite_edge(f))), e, f);
    }
  }
  out.push_back(complement.finish());
}

bool all_pass(const std::vector<IdentityResidual>& items) {
  return std::all_of(items.begin(), items.end(), [](const IdentityResidual& r) { return r.pass; });
}

}  // namespace

IdentityReport check_angle_identities(const PMatrix& p, const TetraAngles& a, const IdentityTolerances& tol) {
  IdentityReport report;
  report.geometry = p.geometry;
  report.family = "angle";
  const Matrix6& m = p.values;
  const double t = tol.angle_identities;

  check_shared(m, "p", t, report.identities);

  Tracker adjacent("p_adjacent", t);
  for (const auto& [i, j, k, l] : labellings()) {
    const int ij = edge_index(i, j);
    const double lhs = m(ij, edge_index(i, k));
    const double rhs = -m(ij, edge_index(k, l)) * std::cos(a(j, k));
    adjacent.observe(std::abs(lhs - rhs), ij, edge_index(i, k));
  }
  report.identities.push_back(adjacent.finish());

  Tracker diagonal("p_diagonal", t);
  for (int e = 0; e < kEdgeCount; ++e) {
    diagonal.observe(std::abs(m(e, e) - m(e, opposite_edge(e)) * w_angle(a, e)), e, e);
  }
  report.identities.push_back(diagonal.finish());

  check_complement(m, "p", t, report.identities);
  report.pass = all_pass(report.identities);
  return report;
}

IdentityReport check_length_identities(const RMatrix& r, const JacobianMatrix& jacobian, const TetraLengths& x,
                                       const IdentityTolerances& tol) {
  IdentityReport report;
  report.geometry = x.geometry;
  report.family = "length";
  report.lengths = x.x;
  const Matrix6& m = r.values;
  const double t = tol.length_identities;

  check_shared(m, "r", t, report.identities);

  Tracker adjacent("r_adjacent", t);
  for (const auto& [i, j, k, l] : labellings()) {
    const int ij = edge_index(i, j);
    const double lhs = m(ij, edge_index(i, k));
    const double rhs = m(ij, edge_index(k, l)) * c_lambda(x(i, l), x.geometry);
    adjacent.observe(std::abs(lhs - rhs), ij, edge_index(i, k));
  }
  report.identities.push_back(adjacent.finish());

  Tracker diagonal("r_diagonal", t);
  for (int e = 0; e < kEdgeCount; ++e) {
    diagonal.observe(std::abs(m(e, e) - m(e, opposite_edge(e)) * w_length(x, e)), e, e);
  }
  report.identities.push_back(diagonal.finish());

  check_complement(m, "r", t, report.identities);

  Tracker inverse("inverse", tol.inverse);
  const Matrix6 product = jacobian.values * r.inverse_jacobian - Matrix6::Identity();
  for (int e = 0; e < kEdgeCount; ++e) {
    for (int f = 0; f < kEdgeCount; ++f) inverse.observe(std::abs(product(e, f)), e, f);
  }
  report.identities.push_back(inverse.finish());

  report.pass = all_pass(report.identities);
  return report;
}

IdentityReport verify_angle_identities(const TetraLengths& x, const IdentityTolerances& tol) {
  const TetraSolution sol = solve_tetra(x);
  const JacobianMatrix jac = jacobian_analytic(sol, AssemblyMode::Direct);
  IdentityReport report = check_angle_identities(p_matrix(jac, sol.angles), sol.angles, tol);
  report.lengths = x.x;
  return report;
}

IdentityReport verify_length_identities(const TetraLengths& x, const IdentityTolerances& tol) {
  if (!is_curved(x.geometry)) {
    throw GeometryError(ErrorKind::WrongGeometry,
                        "length identities hold in spherical and hyperbolic geometry only");
  }
  return check_length_identities(r_matrix(x), jacobian_analytic(x, AssemblyMode::Direct), x, tol);
}

double one_form_loop_residual(const TetraLengths& x0, double radius, int first_edge, int second_edge, int n_steps,
                              const Tolerances& tol) {
  if (first_edge < 0 || first_edge >= kEdgeCount || second_edge < 0 || second_edge >= kEdgeCount ||
      first_edge == second_edge) {
    throw std::invalid_argument("loop plane needs two distinct edge indices in 0..5");
  }
  if (n_steps < 3) throw std::invalid_argument("loop needs at least 3 steps");
  if (radius == 0.0) return 0.0;

  std::vector<EdgeVector> offsets(static_cast<std::size_t>(n_steps));
  std::vector<TetraAngles> angles(static_cast<std::size_t>(n_steps));
  for (int k = 0; k < n_steps; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_steps;
    EdgeVector d{};
    d[first_edge] = radius * std::cos(theta);
    d[second_edge] = radius * std::sin(theta);
    TetraLengths x = x0;
    for (int e = 0; e < kEdgeCount; ++e) x.x[e] += d[e];
    try {
      angles[k] = curvature_map(x, tol);
    } catch (const GeometryError& err) {
      throw GeometryError(ErrorKind::InvalidTetrahedron, std::string("loop leaves the valid region: ") + err.what());
    }
    offsets[k] = d;
  }

  // x0 . (a_{k+1} - a_k) telescopes to zero around the loop, so only the
  // offsets from x0 enter the sum.
  double sum = 0.0;
  double carry = 0.0;
  for (int k = 0; k < n_steps; ++k) {
    const int next = (k + 1) % n_steps;
    double term = 0.0;
    for (int e = 0; e < kEdgeCount; ++e) {
      term += 0.5 * (offsets[k][e] + offsets[next][e]) * (angles[next].a[e] - angles[k].a[e]);
    }
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return std::abs(sum + carry);
}

}  // namespace schlafli
