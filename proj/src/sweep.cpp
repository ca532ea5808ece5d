#include "schlafli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace schlafli {

void SweepConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("sample count must be at least 1");
  if (!(domain.lo > 0.0)) throw std::invalid_argument("range lower bound must be positive");
  if (!(domain.hi > domain.lo)) throw std::invalid_argument("range upper bound must exceed the lower bound");
  if (geometry == Geometry::Spherical && !(domain.hi < std::numbers::pi)) {
    throw std::invalid_argument("spherical range upper bound must be below pi");
  }
  if (!(domain.min_angle >= 0.0) || !(domain.min_angle < std::numbers::pi / 2)) {
    throw std::invalid_argument("minimum angle must be in [0, pi/2)");
  }
}

namespace {

std::vector<IdentityResidual> evaluate(const TetraLengths& x, const IdentityTolerances& tol) {
  std::vector<IdentityResidual> out = verify_angle_identities(x, tol).identities;
  if (is_curved(x.geometry)) {
    const auto more = verify_length_identities(x, tol).identities;
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<TetraLengths> samples =
      sample_tetrahedra(config.geometry, config.samples, config.domain, config.seed);

  std::vector<std::vector<IdentityResidual>> results(samples.size());
  unsigned workers = config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t i = next++; i < samples.size(); i = next++) {
      try {
        results[i] = evaluate(samples[i], config.tolerances);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport report;
  report.config = config;
  report.evaluated = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (report.entries.empty()) {
      for (const auto& r : results[i]) report.entries.push_back({r, i, samples[i].x});
      continue;
    }
    for (std::size_t k = 0; k < results[i].size(); ++k) {
      SweepEntry& entry = report.entries[k];
      const IdentityResidual& r = results[i][k];
      if (std::isnan(entry.worst.residual)) continue;
      if (std::isnan(r.residual) || r.residual > entry.worst.residual) entry = {r, i, samples[i].x};
    }
  }
  report.pass = std::all_of(report.entries.begin(), report.entries.end(),
                            [](const SweepEntry& e) { return e.worst.pass; });
  return report;
}

}  // namespace schlafli
