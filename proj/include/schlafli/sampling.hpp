#pragma once

#include <cstdint>
#include <vector>

#include "schlafli/tetra.hpp"

namespace schlafli {

/// Rejection-sampling domain for random tetrahedra: lengths uniform in
/// [lo, hi], every face angle and every dihedral angle in
/// [min_angle, pi - min_angle].
struct SamplingDomain {
  double lo = 0.3;
  double hi = 1.2;
  double min_angle = 0.05;
};

/// SplitMix64. Fixed arithmetic, so a seed gives the same stream on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// True if x is realizable and all its face and dihedral angles keep
/// `min_angle` away from 0 and pi.
bool within_domain(const TetraLengths& x, double min_angle);

/// `count` tetrahedra drawn in sequence from one stream seeded by `seed`.
/// Throws std::invalid_argument for an empty or inverted range and
/// std::runtime_error if acceptance is too rare to fill the request.
std::vector<TetraLengths> sample_tetrahedra(Geometry g, std::size_t count, const SamplingDomain& domain,
                                            std::uint64_t seed);

}  // namespace schlafli
