#include "schlafli/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace schlafli {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool within_domain(const TetraLengths& x, double min_angle) {
  if (!is_valid(x.x, x.geometry).valid) return false;
  TetraSolution sol;
  try {
    sol = solve_tetra(x);
  } catch (const GeometryError&) {
    return false;
  }
  const auto ok = [min_angle](double angle) { return angle >= min_angle && angle <= std::numbers::pi - min_angle; };
  for (const Face& face : sol.faces) {
    for (double angle : face.triangle.angles) {
      if (!ok(angle)) return false;
    }
  }
  for (double angle : sol.angles.a) {
    if (!ok(angle)) return false;
  }
  return true;
}

std::vector<TetraLengths> sample_tetrahedra(Geometry g, std::size_t count, const SamplingDomain& domain,
                                            std::uint64_t seed) {
  if (!(domain.lo > 0.0) || !(domain.hi > domain.lo)) {
    throw std::invalid_argument("sampling range needs 0 < lo < hi");
  }
  if (g == Geometry::Spherical && !(domain.hi < std::numbers::pi)) {
    throw std::invalid_argument("spherical sampling range must stay below pi");
  }
  Rng rng(seed);
  std::vector<TetraLengths> out;
  out.reserve(count);
  const std::size_t max_attempts = 10000 * (count + 1);
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw std::runtime_error("sampler accepted only " + std::to_string(out.size()) + " of " +
                               std::to_string(count) + " tetrahedra in " + std::to_string(max_attempts) +
                               " attempts");
    }
    TetraLengths x{{}, g};
    for (double& len : x.x) len = rng.uniform(domain.lo, domain.hi);
    if (within_domain(x, domain.min_angle)) out.push_back(x);
  }
  return out;
}

}  // namespace schlafli
