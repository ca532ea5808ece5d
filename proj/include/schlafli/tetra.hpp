#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "schlafli/errors.hpp"
#include "schlafli/geometry.hpp"
#include "schlafli/tolerances.hpp"
#include "schlafli/triangle.hpp"

namespace schlafli {

// Vertices are 0-based (0..3) in the API; edge keys print them 1-based.
// Canonical edge order: 12, 13, 14, 23, 24, 34. Every 6-vector and every 6x6
// matrix in the library uses this order.

struct Edge {
  int i;
  int j;
};

inline constexpr int kEdgeCount = 6;
inline constexpr std::array<Edge, kEdgeCount> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Row/column index of the unordered pair {i, j}. Throws std::out_of_range
/// for equal or out-of-range vertices.
int edge_index(int i, int j);

/// The edge sharing no vertex with `e`.
constexpr int opposite_edge(int e) { return kEdgeCount - 1 - e; }

/// "12", "13", ... "34".
std::string edge_key(int e);

/// Inverse of edge_key; accepts either vertex order ("21" == "12").
std::optional<int> parse_edge_key(std::string_view key);

using EdgeVector = std::array<double, kEdgeCount>;

struct TetraLengths {
  EdgeVector x{};
  Geometry geometry = Geometry::Euclidean;

  double operator()(int i, int j) const { return x[edge_index(i, j)]; }
};

struct TetraAngles {
  EdgeVector a{};

  double operator()(int i, int j) const { return a[edge_index(i, j)]; }
};

/// Spherical triangle of directions at `vertex`. With others = (o0, o1, o2),
/// triangle.angles[m] is the dihedral angle at edge {vertex, o_m} and
/// triangle.lengths[m] is the face angle at `vertex` between the edges to the
/// two remaining vertices, so each dihedral angle is opposite the face angle
/// it does not touch.
struct VertexLink {
  int vertex = 0;
  std::array<int, 3> others{};
  TriangleData triangle;

  double dihedral(int other) const;
};

/// Face triangle with the vertices in ascending order; lengths[p] is the edge
/// opposite vertices[p] and angles[p] the face angle at vertices[p].
struct Face {
  std::array<int, 3> vertices{};
  TriangleData triangle;

  int position(int vertex) const;
};

/// Everything the curvature map computes along the way: the four faces
/// (indexed by the vertex they omit), the four links and the dihedral angles.
struct TetraSolution {
  TetraLengths lengths;
  std::array<Face, 4> faces;
  std::array<VertexLink, 4> links;
  TetraAngles angles;
};

/// Face angle at vertex i of the triangle {i, j, k}; symmetric in j, k.
double face_angle(const TetraLengths& x, int i, int j, int k, const Tolerances& tol = {});

Face solve_face(const TetraLengths& x, int omitted_vertex, const Tolerances& tol = {});

/// Throws GeometryError(InvalidTriangle/NearDegenerate) for a bad face and
/// GeometryError(InvalidLink) when the face angles at k do not form a
/// spherical triangle, i.e. the six lengths bound no tetrahedron.
VertexLink vertex_link(const TetraLengths& x, int k, const Tolerances& tol = {});

/// Faces, links and dihedral angles. Each a_ij is read from the link at the
/// lower vertex and must agree with the link at the other vertex to
/// `tol.link_consistency`. All failures surface as
/// GeometryError(InvalidTetrahedron) with the underlying reason.
TetraSolution solve_tetra(const TetraLengths& x, const Tolerances& tol = {});

/// The curvature map: six edge lengths to six dihedral angles.
TetraAngles curvature_map(const TetraLengths& x, const Tolerances& tol = {});

struct ValidityReport {
  bool valid = true;
  std::optional<ErrorKind> kind;
  std::string reason;
};

/// Realizability test in order: positivity, the spherical bound x < pi, the
/// four faces, the four vertex links. Reports the first failure.
ValidityReport is_valid(const EdgeVector& x, Geometry g, const Tolerances& tol = {});

/// Polar dual of a spherical tetrahedron: the edge complementary to {i, j}
/// gets length pi - a_ij and dihedral angle pi - x_ij.
///
/// Throws GeometryError(WrongGeometry) unless spherical and
/// GeometryError(InvalidTetrahedron) if the dual lengths are not realizable.
std::pair<TetraLengths, TetraAngles> dual(const TetraLengths& x, const TetraAngles& a,
                                          const Tolerances& tol = {});

}  // namespace schlafli
