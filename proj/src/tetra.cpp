#include "schlafli/tetra.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace schlafli {
namespace {

std::array<int, 3> others_of(int omitted) {
  std::array<int, 3> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v) {
    if (v != omitted) out[n++] = v;
  }
  return out;
}

std::string vertex_list(std::initializer_list<int> vs) {
  std::string s;
  for (int v : vs) s += static_cast<char>('1' + v);
  return s;
}

void check_vertex(int v) {
  if (v < 0 || v > 3) throw std::out_of_range("vertex index must be in 0..3, got " + std::to_string(v));
}

}  // namespace

int edge_index(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::out_of_range("edge needs two distinct vertices");
  if (i > j) std::swap(i, j);
  // 01->0 02->1 03->2 12->3 13->4 23->5
  return i == 0 ? j - 1 : i + j;
}

std::string edge_key(int e) {
  const Edge& edge = kEdges.at(static_cast<std::size_t>(e));
  return vertex_list({edge.i, edge.j});
}

std::optional<int> parse_edge_key(std::string_view key) {
  if (key.size() != 2) return std::nullopt;
  const int i = key[0] - '1';
  const int j = key[1] - '1';
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) return std::nullopt;
  return edge_index(i, j);
}

double VertexLink::dihedral(int other) const {
  for (int m = 0; m < 3; ++m) {
    if (others[m] == other) return triangle.angles[m];
  }
  throw std::out_of_range("vertex is not a neighbour in this link");
}

int Face::position(int vertex) const {
  for (int p = 0; p < 3; ++p) {
    if (vertices[p] == vertex) return p;
  }
  return -1;
}

Face solve_face(const TetraLengths& x, int omitted_vertex, const Tolerances& tol) {
  check_vertex(omitted_vertex);
  Face face;
  face.vertices = others_of(omitted_vertex);
  const auto [p, q, r] = face.vertices;
  try {
    face.triangle = solve_angles(x(q, r), x(p, r), x(p, q), x.geometry, tol);
  } catch (const GeometryError& e) {
    throw GeometryError(e.kind(), "face " + vertex_list({p, q, r}) + ": " + e.what());
  }
  return face;
}

double face_angle(const TetraLengths& x, int i, int j, int k, const Tolerances& tol) {
  check_vertex(i);
  check_vertex(j);
  check_vertex(k);
  if (i == j || j == k || i == k) throw std::out_of_range("face angle needs three distinct vertices");
  const Face face = solve_face(x, 6 - i - j - k, tol);
  return face.triangle.angles[face.position(i)];
}

namespace {

VertexLink link_from_faces(const std::array<Face, 4>& faces, int k, const Tolerances& tol) {
  VertexLink link;
  link.vertex = k;
  link.others = others_of(k);
  std::array<double, 3> sides{};
  for (int m = 0; m < 3; ++m) {
    // The face omitting others[m] holds k and the other two neighbours.
    const Face& face = faces[link.others[m]];
    sides[m] = face.triangle.angles[face.position(k)];
  }
  try {
    link.triangle = solve_angles(sides, Geometry::Spherical, tol);
  } catch (const GeometryError& e) {
    const ErrorKind kind = e.kind() == ErrorKind::InvalidTriangle ? ErrorKind::InvalidLink : e.kind();
    throw GeometryError(kind, "link of vertex " + vertex_list({k}) + ": " + e.what());
  }
  return link;
}

std::array<Face, 4> solve_faces(const TetraLengths& x, const Tolerances& tol) {
  std::array<Face, 4> faces;
  for (int v = 0; v < 4; ++v) faces[v] = solve_face(x, v, tol);
  return faces;
}

}  // namespace

VertexLink vertex_link(const TetraLengths& x, int k, const Tolerances& tol) {
  check_vertex(k);
  std::array<Face, 4> faces;
  for (int v = 0; v < 4; ++v) {
    if (v != k) faces[v] = solve_face(x, v, tol);
  }
  return link_from_faces(faces, k, tol);
}

TetraSolution solve_tetra(const TetraLengths& x, const Tolerances& tol) {
  TetraSolution sol;
  sol.lengths = x;
  try {
    sol.faces = solve_faces(x, tol);
    for (int k = 0; k < 4; ++k) sol.links[k] = link_from_faces(sol.faces, k, tol);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::InvalidTetrahedron, std::string(to_string(e.kind())) + " in " + e.what());
  }
  for (int e = 0; e < kEdgeCount; ++e) {
    const auto [i, j] = kEdges[e];
    const double from_i = sol.links[i].dihedral(j);
    const double from_j = sol.links[j].dihedral(i);
    if (!(std::abs(from_i - from_j) <= tol.link_consistency)) {
      std::ostringstream os;
      os.precision(17);
      os << "links disagree on dihedral angle a" << edge_key(e) << ": " << from_i << " vs " << from_j;
      throw GeometryError(ErrorKind::InvalidTetrahedron, os.str());
    }
    sol.angles.a[e] = from_i;
  }
  return sol;
}

TetraAngles curvature_map(const TetraLengths& x, const Tolerances& tol) { return solve_tetra(x, tol).angles; }

ValidityReport is_valid(const EdgeVector& x, Geometry g, const Tolerances& tol) {
  const auto fail = [](ErrorKind kind, std::string reason) {
    return ValidityReport{false, kind, std::move(reason)};
  };
  for (int e = 0; e < kEdgeCount; ++e) {
    if (!(x[e] > 0.0) || !std::isfinite(x[e])) {
      return fail(ErrorKind::InvalidTriangle, "edge " + edge_key(e) + " length is not positive");
    }
  }
  if (g == Geometry::Spherical) {
    for (int e = 0; e < kEdgeCount; ++e) {
      if (!(x[e] < std::numbers::pi)) {
        return fail(ErrorKind::InvalidTriangle, "edge " + edge_key(e) + " length is not below pi");
      }
    }
  }
  const TetraLengths lengths{x, g};
  std::array<Face, 4> faces;
  try {
    faces = solve_faces(lengths, tol);
  } catch (const GeometryError& e) {
    return fail(e.kind(), e.what());
  }
  try {
    for (int k = 0; k < 4; ++k) link_from_faces(faces, k, tol);
  } catch (const GeometryError& e) {
    return fail(e.kind(), e.what());
  }
  return {};
}

std::pair<TetraLengths, TetraAngles> dual(const TetraLengths& x, const TetraAngles& a, const Tolerances& tol) {
  if (x.geometry != Geometry::Spherical) {
    throw GeometryError(ErrorKind::WrongGeometry,
                        "dual tetrahedron is defined for spherical geometry only, got " +
                            std::string(to_string(x.geometry)));
  }
  TetraLengths dual_lengths{{}, Geometry::Spherical};
  TetraAngles dual_angles;
  for (int e = 0; e < kEdgeCount; ++e) {
    dual_lengths.x[opposite_edge(e)] = std::numbers::pi - a.a[e];
    dual_angles.a[opposite_edge(e)] = std::numbers::pi - x.x[e];
  }
  const ValidityReport report = is_valid(dual_lengths.x, Geometry::Spherical, tol);
  if (!report.valid) {
    throw GeometryError(ErrorKind::InvalidTetrahedron, "dual lengths are not realizable: " + report.reason);
  }
  return {dual_lengths, dual_angles};
}

}  // namespace schlafli
