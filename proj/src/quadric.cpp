#include "isotet/quadric.hpp"

#include <algorithm>

namespace isotet {
namespace {

// Edge pair of each axis as (x-side vertices, other pair).
constexpr std::array<std::array<Vertex, 4>, 3> kAxisEdgePairs{{
    {Vertex::D, Vertex::A, Vertex::B, Vertex::C},
    {Vertex::D, Vertex::B, Vertex::C, Vertex::A},
    {Vertex::D, Vertex::C, Vertex::A, Vertex::B},
}};

// Faces through the edge D-axis, by opposite vertex.
constexpr std::array<std::array<Vertex, 2>, 3> kAxisFaces{{
    {Vertex::B, Vertex::C},  // ACD, ABD
    {Vertex::A, Vertex::C},  // BCD, ABD
    {Vertex::B, Vertex::A},  // ACD, BCD
}};

void check_circle_on_sphere(const Sphere& omega, const Circle3& c, double eps_rel) {
  const Vec3 off = c.center - omega.center;
  const double h = dot(off, c.normal);
  const double tol = eps_rel * omega.radius;
  if (norm(off - c.normal * h) > tol || std::abs(std::hypot(h, c.radius) - omega.radius) > tol)
    throw GeometryError(ErrorCode::NotOnSphere);
}

void check_through(const Circle3& c, const Vec3& x, double tol) {
  if (std::abs(distance(x, c.center) - c.radius) > tol || std::abs(dot(x - c.center, c.normal)) > tol)
    throw GeometryError(ErrorCode::NotThroughX);
}

std::pair<Circle3, Circle3> axis_circles(const Tetrahedron& t, const Vec3& x, Axis axis) {
  const auto& e = kAxisEdgePairs[static_cast<std::size_t>(axis)];
  return {circle_through(x, t.vertex(e[0]), t.vertex(e[1])),
          circle_through(x, t.vertex(e[2]), t.vertex(e[3]))};
}

void check_not_vertex(const Tetrahedron& t, const Vec3& x) {
  for (const auto& v : t.vertices())
    if (distance(v, x) < 1e-7 * t.max_edge()) throw GeometryError(ErrorCode::VertexInput);
}

}  // namespace

AxisCoords AxisCoords::of(const IsoscelesParams& pr, Axis axis) {
  switch (axis) {
    case Axis::A: return {{1, 2, 0}, pr.b, pr.c, pr.a};
    case Axis::B: return {{2, 0, 1}, pr.c, pr.a, pr.b};
    case Axis::C: break;
  }
  return {{0, 1, 2}, pr.a, pr.b, pr.c};
}

Vec3 AxisCoords::canonical(double u, double v, double w) const {
  std::array<double, 3> out{};
  out[index[0]] = u;
  out[index[1]] = v;
  out[index[2]] = w;
  return {out[0], out[1], out[2]};
}

Vec3 HyperbolicParaboloid::point(double u, double v) const {
  const auto ax = AxisCoords::of(frame.params, axis);
  return frame.to_world(ax.canonical(u, v, -coefficient * u * v));
}

HyperbolicParaboloid hpar(const CanonicalFrame& frame, Axis axis) {
  const auto ax = AxisCoords::of(frame.params, axis);
  return {frame, axis, ax.s / (ax.p * ax.q)};
}

double hpar_residual(const HyperbolicParaboloid& h, const Vec3& p) {
  const auto ax = AxisCoords::of(h.frame.params, h.axis);
  const Vec3 l = ax.local(h.frame.to_canonical(p));
  return l.z + h.coefficient * l.x * l.y;
}

std::pair<Vec3, Vec3> conjugate_pair_on_hpar(const CanonicalFrame& frame, Axis axis,
                                             const Vec3& p, double eps_rel) {
  const auto h = hpar(frame, axis);
  if (std::abs(hpar_residual(h, p)) > eps_rel * frame.params.circumradius())
    throw GeometryError(ErrorCode::NotOnSurface);
  const Line3 axis_line{frame.translation,
                        frame.rotation.column(static_cast<int>(axis))};
  return {p, reflect_point_line(p, axis_line)};
}

EllipseSection section_ellipses(const IsoscelesParams& params, double z0, double pedal_radius) {
  const auto q = quantities(params);
  const double c = params.c;
  const double d1 = std::abs((z0 + c) / c) * q.center_to_face;
  const double d2 = std::abs((z0 - c) / c) * q.center_to_face;
  if (!(pedal_radius > d1 && pedal_radius > d2)) throw GeometryError(ErrorCode::DegenerateSection);
  const double r1 = std::sqrt((pedal_radius - d1) * (pedal_radius + d1));
  const double r2 = std::sqrt((pedal_radius - d2) * (pedal_radius + d2));
  return {z0, r1, r2, d1, d2, std::asin(q.sin_half_dihedral), std::atan(params.a / params.b)};
}

std::pair<double, double> section_ellipse_residuals(const EllipseSection& e, double x, double y) {
  const double s = std::sin(e.phi), c = std::cos(e.phi);
  const double st2 = std::sin(e.theta) * std::sin(e.theta);
  auto sq = [](double v) { return v * v; };
  const double first = sq(x * c - y * s) * st2 + sq(x * s + y * c) - e.r1 * e.r1;
  const double second = sq(x * c + y * s) * st2 + sq(-x * s + y * c) - e.r2 * e.r2;
  return {first, second};
}

double pedal_distance_identity(const IsoscelesParams& params, const Vec3& p) {
  const Tetrahedron t = canonical_embedding(params);
  const Vec3 foot_b = project_point_plane(p, t.face_plane(Vertex::B));  // on ACD
  const Vec3 foot_c = project_point_plane(p, t.face_plane(Vertex::C));  // on ABD
  const Vec3 m{0.0, 0.0, p.z};
  return (norm2(foot_b - m) - norm2(foot_c - m)) / 4.0;
}

double pedal_distance_closed_form(const IsoscelesParams& params, const Vec3& p) {
  return p.x * p.y / (params.a * params.b) + p.z / params.c;
}

double pedal_distance_factor(const IsoscelesParams& params) {
  return 1.0 / (params.a * params.a) + 1.0 / (params.b * params.b) + 1.0 / (params.c * params.c);
}

double equidistant_projection_residual(const Tetrahedron& t, Axis axis, const Vec3& x) {
  const auto& faces = kAxisFaces[static_cast<std::size_t>(axis)];
  const Vec3 p = project_point_plane(x, t.face_plane(faces[0]));
  const Vec3 q = project_point_plane(x, t.face_plane(faces[1]));
  const Vec3 r = bimedian(t, axis).closest_point(x);
  return std::abs(distance(p, r) - distance(r, q));
}

double tangency_det(const IsoscelesParams& params, const Vec3& pt, Axis axis, double eps_rel) {
  const double big_r = params.circumradius();
  if (std::abs(norm(pt) - big_r) > eps_rel * big_r) throw GeometryError(ErrorCode::NotOnSphere);
  const auto ax = AxisCoords::of(params, axis);
  const Vec3 l = ax.local(pt);
  const double p = ax.p, q = ax.q, s = ax.s;
  const Vec3 r0{q * l.z, q * s, l.x};
  const Vec3 r1{-p * s, -p * l.z, l.y};
  const Vec3 r2{-q * l.x, p * l.y, l.z};
  return triple(r0, r1, r2);
}

double tangency_det_factored(const IsoscelesParams& params, const Vec3& pt, Axis axis) {
  const auto ax = AxisCoords::of(params, axis);
  const Vec3 l = ax.local(pt);
  return -(ax.p * ax.p + ax.q * ax.q) * (ax.p * ax.q * l.z + l.x * l.y * ax.s);
}

double circles_tangent_sine(const Tetrahedron& t, const Vec3& x, Axis axis) {
  check_not_vertex(t, x);
  const auto [c1, c2] = axis_circles(t, x, axis);
  return norm(cross(c1.tangent_at(x), c2.tangent_at(x)));
}

bool circles_touch(const Tetrahedron& t, const Vec3& x, Axis axis, double angle_tol) {
  return circles_tangent_sine(t, x, axis) <= angle_tol;
}

std::variant<Vec3, Tangent> second_circle_intersection(const Sphere& omega, const Circle3& c1,
                                                       const Circle3& c2, const Vec3& x,
                                                       double eps_rel) {
  check_circle_on_sphere(omega, c1, eps_rel);
  check_circle_on_sphere(omega, c2, eps_rel);
  const double tol = eps_rel * omega.radius;
  check_through(c1, x, tol);
  check_through(c2, x, tol);
  if (norm(cross(c1.normal, c2.normal)) <= eps_rel) throw GeometryError(ErrorCode::CoincidentCircles);

  // The common chord lies on both circle planes; its far end is the mirror
  // of x in the chord midpoint.
  const Line3 chord = plane_plane_intersection(c1.plane(), c2.plane(), eps_rel);
  const Vec3 mid = chord.closest_point(omega.center);
  const Vec3 second = mid * 2.0 - chord.closest_point(x);
  if (distance(second, x) <= tol) return Tangent{};
  return second;
}

Vec3 bogdanov_conjugate(const Tetrahedron& t, const Vec3& x, Axis axis, double eps_rel) {
  check_not_vertex(t, x);
  const Sphere omega = circumsphere4(t.A(), t.B(), t.C(), t.D());
  const auto [c1, c2] = axis_circles(t, x, axis);
  const auto hit = second_circle_intersection(omega, c1, c2, x, eps_rel);
  // Touching circles mean x is on the axis surface, where the second point is x.
  const Vec3 xa = std::holds_alternative<Vec3>(hit) ? std::get<Vec3>(hit) : x;
  return reflect_point_line(xa, bimedian(t, axis));
}

Vec3 sphere_hpar_point(const IsoscelesParams& params, Axis axis, double t, bool upper) {
  const auto ax = AxisCoords::of(params, axis);
  const double big_r = params.circumradius();
  const double u = std::clamp(t, -1.0, 1.0) * big_r;
  const double k = ax.s / (ax.p * ax.q);
  // u^2 + v^2 + k^2 u^2 v^2 = R^2 with w = -k u v.
  const double v2 = (big_r - u) * (big_r + u) / (1.0 + k * k * u * u);
  const double v = (upper ? 1.0 : -1.0) * std::sqrt(std::max(v2, 0.0));
  return ax.canonical(u, v, -k * u * v);
}

}  // namespace isotet
