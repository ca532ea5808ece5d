#include "schlafli/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace schlafli {

Geometry geometry_from_curvature(int lambda) {
  switch (lambda) {
    case -1:
      return Geometry::Hyperbolic;
    case 0:
      return Geometry::Euclidean;
    case 1:
      return Geometry::Spherical;
    default:
      throw std::invalid_argument("curvature must be -1, 0 or +1, got " + std::to_string(lambda));
  }
}

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Hyperbolic:
      return "hyperbolic";
    case Geometry::Euclidean:
      return "euclidean";
    case Geometry::Spherical:
      return "spherical";
  }
  return "unknown";
}

Geometry parse_geometry(std::string_view name) {
  if (name == "spherical" || name == "1" || name == "+1") return Geometry::Spherical;
  if (name == "euclidean" || name == "0") return Geometry::Euclidean;
  if (name == "hyperbolic" || name == "-1") return Geometry::Hyperbolic;
  throw std::invalid_argument("unknown geometry '" + std::string(name) +
                              "' (expected spherical, euclidean or hyperbolic)");
}

double s_lambda(double t, Geometry g) {
  switch (g) {
    case Geometry::Spherical:
      return std::sin(t);
    case Geometry::Hyperbolic:
      return std::sinh(t);
    case Geometry::Euclidean:
      break;
  }
  return t;
}

double c_lambda(double t, Geometry g) {
  switch (g) {
    case Geometry::Spherical:
      return std::cos(t);
    case Geometry::Hyperbolic:
      return std::cosh(t);
    case Geometry::Euclidean:
      break;
  }
  return 1.0;
}

}  // namespace schlafli
