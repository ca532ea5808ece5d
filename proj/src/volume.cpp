#include "schlafli/volume.hpp"

#include <Eigen/LU>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace schlafli {
namespace {

class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    carry_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void require_curved(Geometry g) {
  if (!is_curved(g)) {
    throw GeometryError(ErrorKind::WrongGeometry,
                        "the Schlaefli volume form vanishes in Euclidean geometry; use the Cayley-Menger volume");
  }
}

VolumeResult with_estimate(const EdgeVector& from, const EdgeVector& to, Geometry g, int n_steps) {
  if (n_steps < 2 || n_steps % 2 != 0) throw std::invalid_argument("n_steps must be even and at least 2");
  VolumeResult result;
  result.n_steps = n_steps;
  result.value = schlaefli_line_integral(from, to, g, n_steps);
  const double coarse = schlaefli_line_integral(from, to, g, n_steps / 2);
  result.error_estimate = std::abs(result.value - coarse) / 3.0;
  return result;
}

}  // namespace

double extrapolated_volume(const EdgeVector& x, Geometry g, int n_steps) {
  if (n_steps < 2 || n_steps % 2 != 0) throw std::invalid_argument("n_steps must be even and at least 2");
  const EdgeVector origin{};
  const double fine = schlaefli_line_integral(origin, x, g, n_steps);
  const double coarse = schlaefli_line_integral(origin, x, g, n_steps / 2);
  return fine + (fine - coarse) / 3.0;
}

double schlaefli_line_integral(const EdgeVector& from, const EdgeVector& to, Geometry g, int n_steps) {
  require_curved(g);
  if (n_steps < 1) throw std::invalid_argument("n_steps must be positive");
  Eigen::Matrix<double, kEdgeCount, 1> start;
  Eigen::Matrix<double, kEdgeCount, 1> direction;
  for (int e = 0; e < kEdgeCount; ++e) {
    start[e] = from[e];
    direction[e] = to[e] - from[e];
  }

  const double half_lambda = 0.5 * curvature(g);
  const double panel = 1.0 / n_steps;
  CompensatedSum sum;
  for (int k = 0; k < n_steps; ++k) {
    const double s = (k + 0.5) * panel;
    const Eigen::Matrix<double, kEdgeCount, 1> point = start + s * direction;
    TetraLengths x{{}, g};
    for (int e = 0; e < kEdgeCount; ++e) x.x[e] = point[e];
    JacobianMatrix jac;
    try {
      jac = jacobian_analytic(x);
    } catch (const GeometryError& err) {
      throw GeometryError(ErrorKind::InvalidTetrahedron,
                          std::string("integration path leaves the valid region: ") + err.what());
    }
    sum.add(half_lambda * point.dot(jac.values * direction) * panel);
  }
  return sum.value();
}

VolumeResult volume_schlaefli(const TetraLengths& x, int n_steps) {
  require_curved(x.geometry);
  return with_estimate(EdgeVector{}, x.x, x.geometry, n_steps);
}

VolumeResult volume_two_segment(const TetraLengths& x, const EdgeVector& waypoint, int n_steps) {
  require_curved(x.geometry);
  const VolumeResult first = with_estimate(EdgeVector{}, waypoint, x.geometry, n_steps);
  const VolumeResult second = with_estimate(waypoint, x.x, x.geometry, n_steps);
  return {first.value + second.value, n_steps, first.error_estimate + second.error_estimate};
}

GradientCheck volume_gradient_check(const TetraLengths& x, double h, int n_steps) {
  require_curved(x.geometry);
  if (!(h > 0.0)) throw std::invalid_argument("step h must be positive");
  const double half_lambda = 0.5 * curvature(x.geometry);
  const double v0 = extrapolated_volume(x.x, x.geometry, n_steps);
  const TetraAngles a0 = curvature_map(x);

  GradientCheck check;
  std::array<double, kEdgeCount> dv{};
  std::array<double, kEdgeCount> predicted{};
  for (int e = 0; e < kEdgeCount; ++e) {
    TetraLengths moved = x;
    moved.x[e] += h;
    dv[e] = extrapolated_volume(moved.x, x.geometry, n_steps) - v0;
    const TetraAngles a1 = curvature_map(moved);
    for (int f = 0; f < kEdgeCount; ++f) predicted[e] += x.x[f] * (a1.a[f] - a0.a[f]);
    predicted[e] *= half_lambda;
    check.max_residual = std::max(check.max_residual, std::abs(dv[e] - predicted[e]));
  }
  // A component much smaller than the largest one can have its sign flipped
  // by the O(h^2) remainder alone; only the dominant ones carry the sign.
  double largest = 0.0;
  for (double p : predicted) largest = std::max(largest, std::abs(p));
  for (int e = 0; e < kEdgeCount; ++e) {
    if (std::abs(predicted[e]) >= 0.1 * largest && std::signbit(dv[e]) != std::signbit(predicted[e])) {
      check.sign_consistent = false;
    }
  }
  check.normalized = check.max_residual / (h * h);
  return check;
}

GradientConvergence volume_gradient_convergence(const TetraLengths& x, double h, int n_steps) {
  GradientConvergence out;
  out.h = h;
  out.fine = volume_gradient_check(x, h, n_steps);
  out.coarse = volume_gradient_check(x, 2.0 * h, n_steps);
  out.ratio = out.fine.max_residual > 0.0 ? out.coarse.max_residual / out.fine.max_residual
                                          : std::numeric_limits<double>::infinity();
  const bool converges = out.ratio >= 3.5 || out.coarse.max_residual <= 1e-10;
  out.pass = converges && out.fine.sign_consistent && out.coarse.sign_consistent;
  return out;
}

double euclidean_volume_cm(const TetraLengths& x) {
  if (x.geometry != Geometry::Euclidean) {
    throw GeometryError(ErrorKind::WrongGeometry, "Cayley-Menger volume is Euclidean only");
  }
  Eigen::Matrix<double, 5, 5> cm = Eigen::Matrix<double, 5, 5>::Ones();
  cm(0, 0) = 0.0;
  for (int v = 0; v < 4; ++v) cm(v + 1, v + 1) = 0.0;
  for (int e = 0; e < kEdgeCount; ++e) {
    const auto [i, j] = kEdges[e];
    const double d2 = x.x[e] * x.x[e];
    cm(i + 1, j + 1) = d2;
    cm(j + 1, i + 1) = d2;
  }
  const double det = Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>>(cm).determinant();
  double scale = 0.0;
  for (double len : x.x) scale = std::max(scale, len);
  // det scales as length^6; anything at round-off level is a flat tetrahedron.
  if (!(det > 1e-12 * std::pow(scale, 6))) {
    throw GeometryError(ErrorKind::InvalidTetrahedron, "Cayley-Menger determinant is not positive (flat or "
                                                        "non-realizable tetrahedron)");
  }
  return std::sqrt(det / 288.0);
}

}  // namespace schlafli
