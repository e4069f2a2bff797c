#include "isotet/tetra.hpp"

#include <algorithm>
#include <string>

namespace isotet {
namespace {

// Indices of the face opposite each vertex, in label order.
constexpr std::array<std::array<std::size_t, 3>, 4> kFaces{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

// Edge D-x and its opposite edge for each bimedian axis x.
constexpr std::array<std::array<Vertex, 4>, 3> kBimedianEdges{{
    {Vertex::D, Vertex::A, Vertex::B, Vertex::C},
    {Vertex::D, Vertex::B, Vertex::A, Vertex::C},
    {Vertex::D, Vertex::C, Vertex::A, Vertex::B},
}};

double angle_cos(const Vec3& apex, const Vec3& p, const Vec3& q) {
  const Vec3 u = p - apex, v = q - apex;
  return dot(u, v) / (norm(u) * norm(v));
}

}  // namespace

std::string_view vertex_name(Vertex v) {
  static constexpr std::array<std::string_view, 4> names{"A", "B", "C", "D"};
  return names[static_cast<std::size_t>(v)];
}

std::string_view axis_name(Axis a) {
  static constexpr std::array<std::string_view, 3> names{"A", "B", "C"};
  return names[static_cast<std::size_t>(a)];
}

std::string edge_name(Edge e) {
  return std::string(vertex_name(e.from)) + std::string(vertex_name(e.to));
}

Edge opposite_edge(Edge e) {
  std::array<Vertex, 2> rest{};
  std::size_t k = 0;
  for (Vertex v : {Vertex::A, Vertex::B, Vertex::C, Vertex::D})
    if (v != e.from && v != e.to) rest[k++] = v;
  return {rest[0], rest[1]};
}

Tetrahedron::Tetrahedron(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d)
    : v_{a, b, c, d} {
  for (const auto& p : v_)
    if (!is_finite(p)) throw GeometryError(ErrorCode::DegenerateTetrahedron, "non-finite vertex");
  if (coplanar(a, b, c, d)) throw GeometryError(ErrorCode::DegenerateTetrahedron);
}

Plane Tetrahedron::face_plane(Vertex v) const {
  const auto& f = kFaces[static_cast<std::size_t>(v)];
  Plane pl = plane_through(v_[f[0]], v_[f[1]], v_[f[2]]);
  if (pl.signed_distance(vertex(v)) > 0.0) pl = {-pl.normal, -pl.offset};
  return pl;
}

double Tetrahedron::face_area(Vertex v) const {
  const auto& f = kFaces[static_cast<std::size_t>(v)];
  return 0.5 * norm(cross(v_[f[1]] - v_[f[0]], v_[f[2]] - v_[f[0]]));
}

Line3 Tetrahedron::edge_line(Edge e) const {
  return Line3::through(vertex(e.from), vertex(e.to) - vertex(e.from));
}

double Tetrahedron::edge_length(Edge e) const { return distance(vertex(e.from), vertex(e.to)); }

double Tetrahedron::max_edge() const {
  double m = 0.0;
  for (const auto& e : kEdges) m = std::max(m, edge_length(e));
  return m;
}

double Tetrahedron::signed_volume() const {
  return triple(v_[1] - v_[0], v_[2] - v_[0], v_[3] - v_[0]) / 6.0;
}

Vec3 Tetrahedron::centroid() const { return (v_[0] + v_[1] + v_[2] + v_[3]) / 4.0; }

Tetrahedron Tetrahedron::transformed(const RigidMotion& m) const {
  return {m.apply(v_[0]), m.apply(v_[1]), m.apply(v_[2]), m.apply(v_[3])};
}

IsoscelesParams IsoscelesParams::make(double a, double b, double c) {
  if (a == 0.0 || b == 0.0 || c == 0.0) throw GeometryError(ErrorCode::ZeroParameter);
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw GeometryError(ErrorCode::BadInput, "non-finite parameter");
  return {a, b, c};
}

Tetrahedron canonical_embedding(const IsoscelesParams& p) {
  const auto q = IsoscelesParams::make(p.a, p.b, p.c);
  return {{-q.a, q.b, q.c}, {q.a, -q.b, q.c}, {q.a, q.b, -q.c}, {-q.a, -q.b, -q.c}};
}

Tetrahedron posed_tetrahedron(const CanonicalFrame& frame) {
  return canonical_embedding(frame.params).transformed(frame.motion());
}

bool is_isosceles(const Tetrahedron& t, double eps_rel) {
  const double tol = eps_rel * t.max_edge();
  for (std::size_t i = 0; i < 3; ++i) {
    const Edge e = kEdges[i];
    if (std::abs(t.edge_length(e) - t.edge_length(opposite_edge(e))) > tol) return false;
  }
  return true;
}

CanonicalFrame fit_canonical_frame(const Tetrahedron& t, double eps_rel) {
  if (!is_isosceles(t, eps_rel)) throw GeometryError(ErrorCode::NotIsosceles);
  auto sq = [&](Vertex u, Vertex v) {
    const double l1 = t.edge_length({u, v});
    const double l2 = t.edge_length(opposite_edge({u, v}));
    return 0.5 * (l1 * l1 + l2 * l2);
  };
  const double ab = sq(Vertex::A, Vertex::B);
  const double ac = sq(Vertex::A, Vertex::C);
  const double bc = sq(Vertex::B, Vertex::C);
  const double a2 = (ab + ac - bc) / 8.0;
  const double b2 = (ab + bc - ac) / 8.0;
  const double c2 = (ac + bc - ab) / 8.0;
  const double scale = t.max_edge();
  const double floor = eps_rel * scale * scale;
  if (a2 <= floor || b2 <= floor || c2 <= floor) throw GeometryError(ErrorCode::DegenerateParams);

  // Gram-Schmidt over the bimedian directions, in label order.
  const Vec3 ex = normalized(bimedian(t, Axis::A).direction);
  Vec3 ey = bimedian(t, Axis::B).direction;
  ey = normalized(ey - ex * dot(ey, ex));
  Vec3 ez = bimedian(t, Axis::C).direction;
  ez = normalized(ez - ex * dot(ez, ex) - ey * dot(ez, ey));

  double c = std::sqrt(c2);
  if (triple(ex, ey, ez) < 0.0) {
    ez = -ez;
    c = -c;
  }
  return {IsoscelesParams{std::sqrt(a2), std::sqrt(b2), c}, Mat3::from_columns(ex, ey, ez),
          t.centroid()};
}

IsoscelesQuantities quantities(const IsoscelesParams& p) {
  const double a2 = p.a * p.a, b2 = p.b * p.b, c2 = p.c * p.c;
  const double s = 2.0 * std::sqrt(a2 * b2 + b2 * c2 + c2 * a2);
  const double d = 2.0 * std::abs(p.a * p.b * p.c) / s;
  return {s, d, d / std::abs(p.c), p.circumradius()};
}

Vec3 circumcenter(const Tetrahedron& t) {
  try {
    return circumsphere4(t.A(), t.B(), t.C(), t.D()).center;
  } catch (const GeometryError&) {
    throw GeometryError(ErrorCode::DegenerateTetrahedron);
  }
}

double circumradius(const Tetrahedron& t) { return distance(circumcenter(t), t.A()); }

Vec3 incenter(const Tetrahedron& t) {
  Vec3 sum;
  double total = 0.0;
  for (Vertex v : {Vertex::A, Vertex::B, Vertex::C, Vertex::D}) {
    const double area = t.face_area(v);
    sum += t.vertex(v) * area;
    total += area;
  }
  if (!(total > 0.0)) throw GeometryError(ErrorCode::DegenerateTetrahedron);
  return sum / total;
}

std::array<double, 3> face_sides(const Tetrahedron& t, Vertex v) {
  const auto& f = kFaces[static_cast<std::size_t>(v)];
  const auto& vs = t.vertices();
  std::array<double, 3> s{distance(vs[f[0]], vs[f[1]]), distance(vs[f[1]], vs[f[2]]),
                          distance(vs[f[0]], vs[f[2]])};
  std::sort(s.begin(), s.end());
  return s;
}

bool faces_congruent(const Tetrahedron& t, double eps_rel) {
  const double tol = eps_rel * t.max_edge();
  const auto ref = face_sides(t, Vertex::A);
  for (Vertex v : {Vertex::B, Vertex::C, Vertex::D}) {
    const auto s = face_sides(t, v);
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(s[i] - ref[i]) > tol) return false;
  }
  return true;
}

bool faces_acute(const Tetrahedron& t, double eps_rel) {
  const auto& vs = t.vertices();
  for (const auto& f : kFaces) {
    for (std::size_t k = 0; k < 3; ++k) {
      const double cosine = angle_cos(vs[f[k]], vs[f[(k + 1) % 3]], vs[f[(k + 2) % 3]]);
      if (!(cosine > eps_rel)) return false;
    }
  }
  return true;
}

double max_face_angle(const Tetrahedron& t) {
  const auto& vs = t.vertices();
  double worst = 0.0;
  for (const auto& f : kFaces)
    for (std::size_t k = 0; k < 3; ++k) {
      const Vec3 u = vs[f[(k + 1) % 3]] - vs[f[k]];
      const Vec3 w = vs[f[(k + 2) % 3]] - vs[f[k]];
      worst = std::max(worst, std::atan2(norm(cross(u, w)), dot(u, w)));
    }
  return worst;
}

std::pair<Vec3, Vec3> bimedian_endpoints(const Tetrahedron& t, Axis axis) {
  const auto& e = kBimedianEdges[static_cast<std::size_t>(axis)];
  return {midpoint(t.vertex(e[0]), t.vertex(e[1])), midpoint(t.vertex(e[2]), t.vertex(e[3]))};
}

Line3 bimedian(const Tetrahedron& t, Axis axis) {
  const auto [from, to] = bimedian_endpoints(t, axis);
  return Line3::through(from, to - from);
}

}  // namespace isotet
