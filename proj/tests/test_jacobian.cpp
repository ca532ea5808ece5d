#include <doctest.h>

#include <Eigen/SVD>
#include <numbers>

#include "oracles.hpp"
#include "schlafli/jacobian.hpp"
#include "support.hpp"

using namespace schlafli;
using std::numbers::pi;
using testing_support::uniform_tetra;

namespace {

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("no GeometryError");
  return ErrorKind::InvalidLink;
}

}  // namespace

TEST_CASE("regular flat jacobian") {
  const auto x = uniform_tetra(1.0, Geometry::Euclidean);
  const auto j = jacobian_analytic(x);
  const int e12 = edge_index(0, 1), e34 = edge_index(2, 3), e13 = edge_index(0, 2);
  CHECK(std::abs(j.values(e12, e34) - std::sqrt(2.0)) <= 1e-12);
  // each vertex carries one unit of the rescaling, so the row sums vanish
  CHECK(std::abs(j.values(e12, e12) - std::sqrt(2.0) / 3) <= 1e-12);
  CHECK(std::abs(j.values(e12, e13) + std::sqrt(2.0) / 3) <= 1e-12);

  const auto fd = jacobian_fd(x, 1e-5);
  CHECK(std::abs(fd.values(e12, e34) - std::sqrt(2.0)) <= 1e-8);

  const auto p = p_matrix(x);
  CHECK(std::abs(p.values(e12, e34) - 9 * std::sqrt(2.0) / 8) <= 1e-12);
  CHECK(w_angle(curvature_map(x), e12) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("orthant jacobian") {
  const auto x = uniform_tetra(pi / 2, Geometry::Spherical);
  const auto j = jacobian_analytic(x);
  const auto p = p_matrix(x);
  for (int e = 0; e < kEdgeCount; ++e) {
    CHECK(std::abs(j.values(e, e)) <= 1e-12);
    CHECK(std::abs(p.values(e, e)) <= 1e-12);
    CHECK(std::abs(w_angle(curvature_map(x), e)) <= 1e-15);
    CHECK(std::abs(w_length(x, e)) <= 1e-15);
  }
  const auto r = r_matrix(x);
  for (int e = 0; e < kEdgeCount; ++e) CHECK(std::abs(r.values(e, e)) <= 1e-12);
  CHECK(r.condition == doctest::Approx(1.0));
}

TEST_CASE("analytic jacobian against the gram oracle") {
  // Fourth-order differences of an independent angle formula. Thin samples
  // have entries near 100, so the oracle's own truncation sets the floor.
  for (Geometry g : testing_support::kAllGeometries) {
    double worst = 0.0;
    for (const auto& x : testing_support::samples(g, 100, 23)) {
      const auto j = jacobian_analytic(x);
      const Eigen::Matrix<double, 6, 6> ref = oracle::jacobian(x.x, g);
      worst = std::max(worst, (j.values - ref).cwiseAbs().maxCoeff() / std::max(1.0, ref.cwiseAbs().maxCoeff()));
    }
    CAPTURE(to_string(g));
    CHECK(worst <= 1e-7);
  }
}

TEST_CASE("assembly modes agree") {
  for (Geometry g : testing_support::kAllGeometries) {
    for (const auto& x : testing_support::samples(g, 200, 4)) {
      const auto direct = jacobian_analytic(x, AssemblyMode::Direct);
      const auto minimal = jacobian_analytic(x, AssemblyMode::Minimal);
      CHECK(max_relative_error(minimal.values, direct.values) <= 1e-10);
    }
  }
  CHECK(parse_assembly_mode("minimal") == AssemblyMode::Minimal);
  CHECK_THROWS_AS(parse_assembly_mode("fast"), std::invalid_argument);
}

TEST_CASE("chain rule through either link") {
  const auto sol = solve_tetra(testing_support::generic(Geometry::Hyperbolic));
  for (int e = 0; e < kEdgeCount; ++e) {
    const auto [i, j] = kEdges[e];
    for (int rs = 0; rs < kEdgeCount; ++rs) {
      const double via_i = dangle_dlength_via_link(sol, i, j, rs);
      const double via_j = dangle_dlength_via_link(sol, j, i, rs);
      CHECK(via_i == doctest::Approx(via_j).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(dangle_dlength_via_link(sol, 1, 1, 0), std::out_of_range);
}

TEST_CASE("flat jacobian annihilates the lengths") {
  for (const auto& x : testing_support::samples(Geometry::Euclidean, 200, 8)) {
    const auto j = jacobian_analytic(x);
    Eigen::Matrix<double, 6, 1> v;
    for (int e = 0; e < kEdgeCount; ++e) v[e] = x.x[e];
    const Eigen::Matrix<double, 6, 1> jv = j.values * v;
    for (int r = 0; r < kEdgeCount; ++r) CHECK(std::abs(jv[r]) <= 1e-9 * j.values.row(r).norm() * v.norm());
    const Eigen::JacobiSVD<Matrix6> svd(j.values);
    CHECK(svd.singularValues()[5] <= 1e-9 * svd.singularValues()[0]);
  }
  // the difference quotient only annihilates x up to its truncation error
  const auto x = testing_support::generic(Geometry::Euclidean);
  Eigen::Matrix<double, 6, 1> v;
  for (int e = 0; e < kEdgeCount; ++e) v[e] = x.x[e];
  const double coarse = (jacobian_fd(x, 2e-3).values * v).cwiseAbs().maxCoeff();
  const double fine = (jacobian_fd(x, 1e-3).values * v).cwiseAbs().maxCoeff();
  CHECK(fine <= 1e-5);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("finite differences converge at second order") {
  for (Geometry g : testing_support::kAllGeometries) {
    const auto x = testing_support::generic(g);
    const auto j = jacobian_analytic(x);
    const double coarse = max_relative_error(j.values, jacobian_fd(x, 2e-3).values);
    const double fine = max_relative_error(j.values, jacobian_fd(x, 1e-3).values);
    CAPTURE(to_string(g));
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("r-matrix") {
  for (Geometry g : testing_support::kCurved) {
    const auto x = testing_support::generic(g);
    const auto j = jacobian_analytic(x);
    const auto r = r_matrix(x);
    CHECK((j.values * r.inverse_jacobian - Matrix6::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(r.condition > 1.0);
    const double lambda = curvature(g);
    for (int a = 0; a < kEdgeCount; ++a) {
      for (int b = 0; b < kEdgeCount; ++b) {
        const double expected =
            lambda * r.inverse_jacobian(a, b) / (s_lambda(x.x[a], g) * s_lambda(x.x[b], g));
        CHECK(r.values(a, b) == doctest::Approx(expected).epsilon(1e-14));
      }
    }
  }

  // w from the length formula matches the ratio read off the inverse
  const auto hyp = uniform_tetra(1.0, Geometry::Hyperbolic);
  const auto r = r_matrix(hyp);
  for (int e = 0; e < kEdgeCount; ++e) {
    CHECK(w_length(hyp, e) == doctest::Approx(r.values(e, e) / r.values(e, opposite_edge(e))).epsilon(1e-10));
  }

  CHECK(error_kind([] { r_matrix(uniform_tetra(1.0, Geometry::Euclidean)); }) == ErrorKind::WrongGeometry);
  try {
    r_matrix(uniform_tetra(1.0, Geometry::Euclidean));
  } catch (const GeometryError& e) {
    CHECK(std::string(e.what()) == "R-matrix requires curved geometry");
  }
  CHECK(error_kind([] { w_length(uniform_tetra(1.0, Geometry::Euclidean), 0); }) == ErrorKind::WrongGeometry);
}

TEST_CASE("jacobian errors") {
  CHECK(error_kind([] { jacobian_analytic({{1, 1, 1, 1, 1, 10}, Geometry::Euclidean}); }) ==
        ErrorKind::InvalidTetrahedron);
  // near the edge of the valid region a large step leaves it
  const double s3 = std::sqrt(3.0) / 3.0 * 1.0001;
  const TetraLengths thin{{1, 1, s3, 1, s3, s3}, Geometry::Euclidean};
  CHECK(is_valid(thin.x, thin.geometry).valid);
  CHECK(error_kind([&] { jacobian_fd(thin, 1e-2); }) == ErrorKind::InvalidTetrahedron);

  TetraAngles flat_angle;
  flat_angle.a.fill(pi / 2);
  flat_angle.a[0] = pi;
  CHECK(error_kind([&] { w_angle(flat_angle, 0); }) == ErrorKind::NearDegenerate);
}
