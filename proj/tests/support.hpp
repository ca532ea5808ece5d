#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "schlafli/sampling.hpp"

namespace testing_support {

inline constexpr schlafli::Geometry kAllGeometries[] = {schlafli::Geometry::Spherical, schlafli::Geometry::Euclidean,
                                                        schlafli::Geometry::Hyperbolic};
inline constexpr schlafli::Geometry kCurved[] = {schlafli::Geometry::Spherical, schlafli::Geometry::Hyperbolic};

inline std::vector<schlafli::TetraLengths> samples(schlafli::Geometry g, std::size_t n, std::uint64_t seed = 7) {
  return schlafli::sample_tetrahedra(g, n, {}, seed);
}

inline schlafli::TetraLengths uniform_tetra(double len, schlafli::Geometry g) {
  schlafli::TetraLengths x{{}, g};
  x.x.fill(len);
  return x;
}

inline schlafli::TetraLengths generic(schlafli::Geometry g) { return {{0.9, 1.1, 0.7, 1.0, 0.8, 1.2}, g}; }

template <class A, class B>
double max_abs_diff(const A& a, const B& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace testing_support
