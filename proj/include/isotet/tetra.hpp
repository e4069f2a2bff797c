#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "isotet/geom3.hpp"

namespace isotet {

enum class Vertex { A = 0, B = 1, C = 2, D = 3 };
// Bimedian axes. Axis A joins the midpoints of DA and BC, axis B those of DB
// and AC, axis C those of DC and AB.
enum class Axis { A = 0, B = 1, C = 2 };

struct Edge {
  Vertex from;
  Vertex to;
};

inline constexpr std::array<Edge, 6> kEdges{{{Vertex::A, Vertex::B},
                                             {Vertex::A, Vertex::C},
                                             {Vertex::A, Vertex::D},
                                             {Vertex::B, Vertex::C},
                                             {Vertex::B, Vertex::D},
                                             {Vertex::C, Vertex::D}}};

std::string_view vertex_name(Vertex v);
std::string_view axis_name(Axis a);
std::string edge_name(Edge e);
// The edge sharing no vertex with `e`.
Edge opposite_edge(Edge e);

class Tetrahedron {
 public:
  // Throws DegenerateTetrahedron for coplanar vertices.
  Tetrahedron(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

  const Vec3& vertex(Vertex v) const { return v_[static_cast<std::size_t>(v)]; }
  const std::array<Vec3, 4>& vertices() const { return v_; }
  const Vec3& A() const { return v_[0]; }
  const Vec3& B() const { return v_[1]; }
  const Vec3& C() const { return v_[2]; }
  const Vec3& D() const { return v_[3]; }

  // Plane of the face opposite `v`, normal pointing away from `v`.
  Plane face_plane(Vertex v) const;
  double face_area(Vertex v) const;
  Line3 edge_line(Edge e) const;
  double edge_length(Edge e) const;
  double max_edge() const;
  double signed_volume() const;
  Vec3 centroid() const;
  Tetrahedron transformed(const RigidMotion& m) const;

 private:
  std::array<Vec3, 4> v_;
};

struct IsoscelesParams {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;

  // Throws ZeroParameter.
  static IsoscelesParams make(double a, double b, double c);
  double get(Axis axis) const { return axis == Axis::A ? a : (axis == Axis::B ? b : c); }
  double circumradius() const { return std::sqrt(a * a + b * b + c * c); }
};

struct IsoscelesQuantities {
  double face_area;         // S
  double center_to_face;    // d
  double sin_half_dihedral; // sine of half the dihedral angle at CD (and AB)
  double circumradius;      // R
};

// Maps canonical coordinates onto the posed tetrahedron:
// world = rotation * canonical + translation.
struct CanonicalFrame {
  IsoscelesParams params;
  Mat3 rotation;
  Vec3 translation;

  static CanonicalFrame identity(const IsoscelesParams& params) { return {params, {}, {}}; }
  RigidMotion motion() const { return {rotation, translation}; }
  Vec3 to_world(const Vec3& canonical) const { return rotation * canonical + translation; }
  Vec3 to_canonical(const Vec3& world) const {
    return rotation.transposed() * (world - translation);
  }
};

// A = (-a, b, c), B = (a, -b, c), C = (a, b, -c), D = (-a, -b, -c).
Tetrahedron canonical_embedding(const IsoscelesParams& params);
Tetrahedron posed_tetrahedron(const CanonicalFrame& frame);

bool is_isosceles(const Tetrahedron& t, double eps_rel = Tolerance::kDefaultEpsRel);

// Recovers (a, b, c) and the pose, keeping the vertex labels of `t`.
// |a|, |b| are returned positive; c carries the sign that makes the rotation
// proper. Throws NotIsosceles or DegenerateParams.
CanonicalFrame fit_canonical_frame(const Tetrahedron& t,
                                   double eps_rel = Tolerance::kDefaultEpsRel);

IsoscelesQuantities quantities(const IsoscelesParams& params);

// Throw DegenerateTetrahedron.
Vec3 circumcenter(const Tetrahedron& t);
Vec3 incenter(const Tetrahedron& t);
double circumradius(const Tetrahedron& t);

bool faces_congruent(const Tetrahedron& t, double eps_rel = Tolerance::kDefaultEpsRel);
bool faces_acute(const Tetrahedron& t, double eps_rel = Tolerance::kDefaultEpsRel);
// Sorted side lengths of the face opposite `v`.
std::array<double, 3> face_sides(const Tetrahedron& t, Vertex v);
// Largest interior angle over all faces, radians.
double max_face_angle(const Tetrahedron& t);

// Directed from the midpoint of D-axis to the midpoint of the opposite edge,
// so the canonical embedding gives the coordinate axes scaled by sign(param).
Line3 bimedian(const Tetrahedron& t, Axis axis);
std::pair<Vec3, Vec3> bimedian_endpoints(const Tetrahedron& t, Axis axis);

}  // namespace isotet
