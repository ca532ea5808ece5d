#include <doctest.h>

#include <numbers>

#include "schlafli/identities.hpp"
#include "schlafli/sweep.hpp"
#include "support.hpp"

using namespace schlafli;
using std::numbers::pi;
using testing_support::uniform_tetra;

namespace {

double worst(const IdentityReport& report) {
  double w = 0.0;
  for (const auto& r : report.identities) w = std::max(w, r.residual);
  return w;
}

}  // namespace

TEST_CASE("angle identities on symmetric cases") {
  const auto orthant = verify_angle_identities(uniform_tetra(pi / 2, Geometry::Spherical));
  CHECK(orthant.pass);
  CHECK(worst(orthant) <= 1e-12);
  CHECK(orthant.family == "angle");
  CHECK(orthant.identities.size() == 5);

  const auto regular = verify_angle_identities(uniform_tetra(1.0, Geometry::Euclidean));
  CHECK(regular.pass);
  CHECK(worst(regular) <= 1e-10);
}

TEST_CASE("length identities on symmetric cases") {
  const auto orthant = verify_length_identities(uniform_tetra(pi / 2, Geometry::Spherical));
  CHECK(orthant.pass);
  CHECK(worst(orthant) <= 1e-10);
  CHECK(orthant.family == "length");
  CHECK(orthant.identities.size() == 6);

  try {
    verify_length_identities(uniform_tetra(1.0, Geometry::Euclidean));
    FAIL("expected an error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::WrongGeometry);
  }
}

TEST_CASE("identities hold on random samples") {
  for (Geometry g : testing_support::kAllGeometries) {
    for (const auto& x : testing_support::samples(g, 100, 31)) {
      const auto angle = verify_angle_identities(x);
      CHECK(angle.pass);
      if (is_curved(g)) CHECK(verify_length_identities(x).pass);
    }
  }
}

TEST_CASE("perturbed matrices are caught") {
  const auto x = testing_support::generic(Geometry::Spherical);
  auto p = p_matrix(x);
  p.values(1, 4) += 1e-6;
  const auto report = check_angle_identities(p, curvature_map(x));
  CHECK_FALSE(report.pass);
  bool symmetry_failed = false;
  for (const auto& r : report.identities) {
    if (r.name == "p_symmetry") {
      symmetry_failed = !r.pass;
      CHECK(r.residual == doctest::Approx(1e-6).epsilon(1e-3));
    }
  }
  CHECK(symmetry_failed);

  auto r = r_matrix(x);
  r.values(0, 0) *= 1.001;
  CHECK_FALSE(check_length_identities(r, jacobian_analytic(x), x).pass);
}

TEST_CASE("nan residuals fail") {
  const auto x = testing_support::generic(Geometry::Hyperbolic);
  auto p = p_matrix(x);
  p.values(2, 3) = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(check_angle_identities(p, curvature_map(x)).pass);
}

TEST_CASE("closed one-form loop") {
  for (Geometry g : testing_support::kAllGeometries) {
    const auto x = testing_support::generic(g);
    CHECK(one_form_loop_residual(x, 1e-2, 0, 5, 256) <= 1e-7);
    CHECK(one_form_loop_residual(x, 0.05, 1, 3, 64) <= 1e-7);
    CHECK(one_form_loop_residual(x, 0.0, 0, 5, 256) == 0.0);
  }
  const auto x = testing_support::generic(Geometry::Spherical);
  CHECK_THROWS_AS(one_form_loop_residual(x, 1e-2, 2, 2, 256), std::invalid_argument);
  CHECK_THROWS_AS(one_form_loop_residual(x, 1e-2, 0, 6, 256), std::invalid_argument);
  CHECK_THROWS_AS(one_form_loop_residual(x, 1e-2, 0, 1, 2), std::invalid_argument);
  try {
    one_form_loop_residual(x, 5.0, 0, 1, 64);
    FAIL("expected an error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::InvalidTetrahedron);
  }
}

TEST_CASE("sampling") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }

  const auto xs = sample_tetrahedra(Geometry::Hyperbolic, 50, {}, 42);
  CHECK(xs.size() == 50);
  for (const auto& x : xs) {
    CHECK(within_domain(x, 0.05));
    for (double v : x.x) {
      CHECK(v >= 0.3);
      CHECK(v <= 1.2);
    }
  }
  const auto again = sample_tetrahedra(Geometry::Hyperbolic, 50, {}, 42);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i].x == again[i].x);
  CHECK_THROWS_AS(sample_tetrahedra(Geometry::Spherical, 1, {0.3, 3.5, 0.05}, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_tetrahedra(Geometry::Euclidean, 1, {1.0, 0.5, 0.05}, 1), std::invalid_argument);
}

TEST_CASE("sweeps are independent of worker count") {
  SweepConfig config;
  config.geometry = Geometry::Hyperbolic;
  config.samples = 60;
  const auto serial = run_sweep(config);
  config.workers = 4;
  const auto parallel = run_sweep(config);
  CHECK(serial.pass);
  CHECK(serial.evaluated == 60);
  REQUIRE(serial.entries.size() == parallel.entries.size());
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    CHECK(serial.entries[i].worst.name == parallel.entries[i].worst.name);
    CHECK(serial.entries[i].worst.residual == parallel.entries[i].worst.residual);
    CHECK(serial.entries[i].sample_index == parallel.entries[i].sample_index);
  }

  config.tolerances = {1e-15, 1e-15, 1e-15};
  CHECK_FALSE(run_sweep(config).pass);

  SweepConfig bad;
  bad.samples = 0;
  CHECK_THROWS(bad.validate());
}
