#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schlafli/identities.hpp"
#include "schlafli/sampling.hpp"

namespace schlafli {

struct SweepConfig {
  Geometry geometry = Geometry::Spherical;
  std::size_t samples = 1000;
  SamplingDomain domain;
  std::uint64_t seed = 42;
  IdentityTolerances tolerances;
  /// Worker threads; 0 means one per hardware thread. Never changes the result.
  unsigned workers = 1;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

/// Worst case of one identity over the whole sweep.
struct SweepEntry {
  IdentityResidual worst;
  std::size_t sample_index = 0;
  EdgeVector lengths{};
};

struct SweepReport {
  SweepConfig config;
  std::size_t evaluated = 0;
  std::vector<SweepEntry> entries;
  bool pass = true;
};

/// Draws the samples sequentially, evaluates them in parallel and reduces
/// by maximum in sample order (ties go to the lower index), so the report
/// does not depend on the worker count. Length identities are included for
/// curved geometries.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace schlafli
