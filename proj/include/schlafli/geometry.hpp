#pragma once

#include <string>
#include <string_view>

namespace schlafli {

/// Constant-curvature model space. The underlying value is the curvature.
enum class Geometry : int { Hyperbolic = -1, Euclidean = 0, Spherical = 1 };

constexpr int curvature(Geometry g) { return static_cast<int>(g); }

constexpr bool is_curved(Geometry g) { return g != Geometry::Euclidean; }

/// Throws std::invalid_argument for anything but -1, 0, +1.
Geometry geometry_from_curvature(int lambda);

std::string_view to_string(Geometry g);

/// Accepts "spherical", "euclidean", "hyperbolic" (and the curvature as text).
Geometry parse_geometry(std::string_view name);

/// t, sin(t) or sinh(t) depending on the curvature.
double s_lambda(double t, Geometry g);

/// 1, cos(t) or cosh(t); lambda * S^2 + C^2 = 1 in the curved cases.
double c_lambda(double t, Geometry g);

}  // namespace schlafli
