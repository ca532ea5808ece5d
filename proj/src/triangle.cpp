#include "schlafli/triangle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kernels.hpp"
#include "schlafli/errors.hpp"

namespace schlafli {
namespace {

std::string describe(const std::array<double, 3>& l) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << l[0] << ", " << l[1] << ", " << l[2] << ")";
  return os.str();
}

void check_lengths(const std::array<double, 3>& l, Geometry g) {
  for (int i = 0; i < 3; ++i) {
    if (!(l[i] > 0.0) || !std::isfinite(l[i])) {
      throw GeometryError(ErrorKind::InvalidTriangle,
                          "side lengths must be positive and finite: " + describe(l));
    }
    if (g == Geometry::Spherical && !(l[i] < std::numbers::pi)) {
      throw GeometryError(ErrorKind::InvalidTriangle,
                          "spherical side length must be below pi: " + describe(l));
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    if (!(l[i] < l[j] + l[k])) {
      std::ostringstream os;
      os.precision(17);
      os << "triangle inequality fails: l" << i + 1 << " = " << l[i] << " >= l" << j + 1 << " + l" << k + 1
         << " = " << l[j] + l[k] << " for lengths " << describe(l);
      throw GeometryError(ErrorKind::InvalidTriangle, os.str());
    }
  }
  if (g == Geometry::Spherical) {
    const double perimeter = l[0] + l[1] + l[2];
    if (!(perimeter < 2.0 * std::numbers::pi)) {
      std::ostringstream os;
      os.precision(17);
      os << "spherical perimeter " << perimeter << " is not below 2*pi for lengths " << describe(l);
      throw GeometryError(ErrorKind::InvalidTriangle, os.str());
    }
  }
}

}  // namespace

TriangleData solve_angles(double l1, double l2, double l3, Geometry g, const Tolerances& tol) {
  return solve_angles(std::array<double, 3>{l1, l2, l3}, g, tol);
}

TriangleData solve_angles(const std::array<double, 3>& l, Geometry g, const Tolerances& tol) {
  check_lengths(l, g);

  TriangleData t{l, detail::solve_angles(l, g), g};

  for (int i = 0; i < 3; ++i) {
    if (!(t.angles[i] > tol.degenerate_angle) || !(t.angles[i] < std::numbers::pi - tol.degenerate_angle)) {
      std::ostringstream os;
      os.precision(17);
      os << "near-degenerate triangle: angle a" << i + 1 << " = " << t.angles[i] << " for lengths "
         << describe(l);
      throw GeometryError(ErrorKind::NearDegenerate, os.str());
    }
  }
  return t;
}

double a_invariant(const TriangleData& t, int i) { return detail::a_invariant(t.lengths, t.angles, t.geometry, i); }

double sine_law_residual(const TriangleData& t) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double lhs = s_lambda(t.lengths[i], t.geometry) * std::sin(t.angles[j]);
      const double rhs = s_lambda(t.lengths[j], t.geometry) * std::sin(t.angles[i]);
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  return worst;
}

double dangle_dlength(const TriangleData& t, int i, int j) {
  return detail::dangle_dlength(t.lengths, t.angles, t.geometry, i, j);
}

}  // namespace schlafli
