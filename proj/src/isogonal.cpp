#include "isotet/isogonal.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

namespace isotet {
namespace {

constexpr std::array<Vertex, 4> kVertices{Vertex::A, Vertex::B, Vertex::C, Vertex::D};

bool on_edge_line(const Tetrahedron& t, Edge e, const Vec3& p) {
  return t.edge_line(e).distance_to(p) < kEdgeSnapRel * t.max_edge();
}

// Reduce an angle modulo pi into (-pi/2, pi/2].
double wrap_half_turn(double a) {
  constexpr double pi = std::numbers::pi;
  a = std::remainder(a, pi);
  return a <= -pi / 2 ? a + pi : a;
}

}  // namespace

std::array<Vec3, 4> face_reflections(const Tetrahedron& t, const Vec3& p) {
  std::array<Vec3, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = reflect_point_plane(p, t.face_plane(kVertices[i]));
  return out;
}

std::array<Vec3, 4> face_projections(const Tetrahedron& t, const Vec3& p) {
  std::array<Vec3, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = project_point_plane(p, t.face_plane(kVertices[i]));
  return out;
}

ConjugateResult isogonal_conjugate(const Tetrahedron& t, const Vec3& p, double eps_rel) {
  const double scale = t.max_edge();
  for (Vertex v : kVertices)
    if (distance(p, t.vertex(v)) < kVertexSnapRel * scale) return VertexDegenerate{v};
  for (const Edge& e : kEdges)
    if (on_edge_line(t, e, p)) return OnEdgeLine{e};

  const auto r = face_reflections(t, p);
  try {
    return FinitePoint{circumsphere4(r[0], r[1], r[2], r[3], eps_rel).center};
  } catch (const GeometryError& err) {
    if (err.code() != ErrorCode::CoplanarPoints) throw;
    return AtInfinity{best_fit_normal({r.begin(), r.end()})};
  }
}

PedalSphere pedal_sphere(const Tetrahedron& t, const Vec3& p, double eps_rel) {
  const auto feet = face_projections(t, p);
  try {
    return {circumsphere4(feet[0], feet[1], feet[2], feet[3], eps_rel), feet};
  } catch (const GeometryError& err) {
    if (err.code() != ErrorCode::CoplanarPoints) throw;
    throw GeometryError(ErrorCode::DegenerateProjections);
  }
}

double dihedral_isogonality_residual(const Tetrahedron& t, Edge edge, const Vec3& p,
                                     const Vec3& q) {
  if (on_edge_line(t, edge, p) || on_edge_line(t, edge, q))
    throw GeometryError(ErrorCode::PointOnEdgeLine, edge_name(edge));

  const Vec3& origin = t.vertex(edge.from);
  const Vec3 axis = normalized(t.vertex(edge.to) - origin);
  const Edge other = opposite_edge(edge);
  auto perp = [&](const Vec3& x) {
    const Vec3 d = x - origin;
    return d - axis * dot(d, axis);
  };
  // Rotation angle about the edge, measured from the half-plane through the
  // first remaining vertex.
  const Vec3 e1 = normalized(perp(t.vertex(other.from)));
  const Vec3 e2 = cross(axis, e1);
  auto angle = [&](const Vec3& x) {
    const Vec3 d = perp(x);
    return std::atan2(dot(d, e2), dot(d, e1));
  };
  // Mirroring in the bisector plane sends angle phi to (dihedral - phi); the
  // exterior bisector gives the same planes modulo pi.
  const double dihedral = angle(t.vertex(other.to));
  return std::abs(wrap_half_turn(angle(p) + angle(q) - dihedral));
}

double isogonality_residual(const Tetrahedron& t, const Vec3& p, const Vec3& q) {
  double worst = 0.0;
  for (const Edge& e : kEdges) {
    if (on_edge_line(t, e, p) || on_edge_line(t, e, q)) continue;
    worst = std::max(worst, dihedral_isogonality_residual(t, e, p, q));
  }
  return worst;
}

bool is_isogonal_pair(const Tetrahedron& t, const Vec3& p, const Vec3& q, double angle_tol) {
  return isogonality_residual(t, p, q) <= angle_tol;
}

}  // namespace isotet
