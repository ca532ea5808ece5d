#pragma once

// Scalar-generic triangle and Jacobian kernels. The public API runs them in
// double; the R-matrix path runs them in long double before inverting.

#include <Eigen/Core>
#include <array>
#include <cmath>

#include "schlafli/geometry.hpp"
#include "schlafli/jacobian.hpp"

namespace schlafli::detail {

template <class Real>
Real s_lambda(Real t, Geometry g) {
  using std::sin;
  using std::sinh;
  switch (g) {
    case Geometry::Spherical:
      return sin(t);
    case Geometry::Hyperbolic:
      return sinh(t);
    case Geometry::Euclidean:
      break;
  }
  return t;
}

template <class Real>
using Triple = std::array<Real, 3>;

/// Half-angle cosine law. Assumes valid lengths.
template <class Real>
Triple<Real> solve_angles(const Triple<Real>& l, Geometry g) {
  using std::atan2;
  using std::sqrt;
  const Real s = (l[0] + l[1] + l[2]) / 2;
  const Real ss = s_lambda(s, g);
  Triple<Real> excess{};
  for (int i = 0; i < 3; ++i) excess[i] = s_lambda(s - l[i], g);
  Triple<Real> a{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    a[i] = 2 * atan2(sqrt(excess[j] * excess[k]), sqrt(ss * excess[i]));
  }
  return a;
}

template <class Real>
Real a_invariant(const Triple<Real>& l, const Triple<Real>& a, Geometry g, int i) {
  using std::sin;
  return sin(a[i]) * s_lambda(l[(i + 1) % 3], g) * s_lambda(l[(i + 2) % 3], g);
}

template <class Real>
Real dangle_dlength(const Triple<Real>& l, const Triple<Real>& a, Geometry g, int i, int j) {
  using std::cos;
  const Real diagonal = s_lambda(l[i], g) / a_invariant(l, a, g, i);
  if (i == j) return diagonal;
  return -diagonal * cos(a[3 - i - j]);
}

/// The three vertices other than `v`, ascending.
constexpr std::array<int, 3> others_of(int v) {
  std::array<int, 3> out{};
  int n = 0;
  for (int u = 0; u < 4; ++u) {
    if (u != v) out[n++] = u;
  }
  return out;
}

constexpr int position_in(const std::array<int, 3>& list, int v) {
  for (int p = 0; p < 3; ++p) {
    if (list[p] == v) return p;
  }
  return -1;
}

/// Faces are indexed by the omitted vertex, with vertices others_of(v) and
/// lengths[p] opposite vertices[p]. The link at v has sides[m] = face angle
/// at v in the face omitting others_of(v)[m], and angles[m] = a_{v, others[m]}.
template <class Real>
struct Solution {
  Geometry geometry = Geometry::Euclidean;
  std::array<Triple<Real>, 4> face_lengths{};
  std::array<Triple<Real>, 4> face_angles{};
  std::array<Triple<Real>, 4> link_sides{};
  std::array<Triple<Real>, 4> link_angles{};
  std::array<Real, kEdgeCount> dihedral{};
};

template <class Real>
Solution<Real> solve_tetra(const std::array<Real, kEdgeCount>& x, Geometry g) {
  Solution<Real> sol;
  sol.geometry = g;
  for (int v = 0; v < 4; ++v) {
    const auto [p, q, r] = others_of(v);
    sol.face_lengths[v] = {x[edge_index(q, r)], x[edge_index(p, r)], x[edge_index(p, q)]};
    sol.face_angles[v] = solve_angles(sol.face_lengths[v], g);
  }
  for (int v = 0; v < 4; ++v) {
    const auto others = others_of(v);
    for (int m = 0; m < 3; ++m) {
      const int omitted = others[m];
      sol.link_sides[v][m] = sol.face_angles[omitted][position_in(others_of(omitted), v)];
    }
    sol.link_angles[v] = solve_angles(sol.link_sides[v], Geometry::Spherical);
  }
  for (int e = 0; e < kEdgeCount; ++e) {
    const auto [i, j] = kEdges[e];
    sol.dihedral[e] = sol.link_angles[i][position_in(others_of(i), j)];
  }
  return sol;
}

/// d a_vw / d x_rs through the link at v.
template <class Real>
Real chain_rule(const Solution<Real>& sol, int v, int w, int rs) {
  const auto others = others_of(v);
  const int mw = position_in(others, w);
  const auto [r, s] = kEdges[rs];
  Real sum = 0;
  for (int m = 0; m < 3; ++m) {
    const int omitted = others[m];
    if (r == omitted || s == omitted) continue;  // this link side does not depend on x_rs
    const auto face = others_of(omitted);
    const int apex = face[0] + face[1] + face[2] - r - s;
    sum += dangle_dlength(sol.link_sides[v], sol.link_angles[v], Geometry::Spherical, mw, m) *
           dangle_dlength(sol.face_lengths[omitted], sol.face_angles[omitted], sol.geometry, position_in(face, v),
                          position_in(face, apex));
  }
  return sum;
}

template <class Real>
Real w_angle(const std::array<Real, kEdgeCount>& a, int edge) {
  using std::cos;
  using std::sin;
  const auto [i, j] = kEdges[edge];
  const auto [k, l] = kEdges[opposite_edge(edge)];
  const auto c = [&](int p, int q) { return cos(a[edge_index(p, q)]); };
  const Real s = sin(a[edge]);
  return (c(i, j) * c(j, k) * c(k, i) + c(i, j) * c(j, l) * c(l, i) + c(i, k) * c(j, l) + c(i, l) * c(j, k)) /
         (s * s);
}

template <class Real>
Eigen::Matrix<Real, kEdgeCount, kEdgeCount> assemble(const Solution<Real>& sol, AssemblyMode mode) {
  using std::cos;
  using std::sin;
  const auto shared_vertex = [](const Edge& a, const Edge& b) {
    return (a.i == b.i || a.i == b.j) ? a.i : a.j;
  };
  const auto other_vertex = [](const Edge& e, int v) { return e.i == v ? e.j : e.i; };
  const auto& a = sol.dihedral;

  Eigen::Matrix<Real, kEdgeCount, kEdgeCount> jac;
  for (int row = 0; row < kEdgeCount; ++row) {
    const Edge e = kEdges[row];
    const int opp = opposite_edge(row);
    const Real opposite_entry = chain_rule(sol, e.i, e.j, opp);
    for (int col = 0; col < kEdgeCount; ++col) {
      const Edge f = kEdges[col];
      Real value = 0;
      if (col == opp) {
        value = opposite_entry;
      } else if (mode == AssemblyMode::Direct) {
        if (col == row) {
          value = chain_rule(sol, e.i, e.j, col);
        } else {
          // Only one face at the unshared vertex contains the column edge.
          const int shared = shared_vertex(e, f);
          value = chain_rule(sol, other_vertex(e, shared), shared, col);
        }
      } else if (col == row) {
        value = opposite_entry * sin(a[row]) / sin(a[opp]) * w_angle(a, row);
      } else {
        // d a_ij / d x_ik = -(d a_ij / d x_kl) cos a_jk sin a_ik / sin a_kl
        const int shared = shared_vertex(e, f);
        const int j = other_vertex(e, shared);
        const int k = other_vertex(f, shared);
        value = -opposite_entry * cos(a[edge_index(j, k)]) * sin(a[col]) / sin(a[opp]);
      }
      jac(row, col) = value;
    }
  }
  return jac;
}

}  // namespace schlafli::detail
