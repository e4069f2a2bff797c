#include "suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "isotet/circlesphere.hpp"
#include "isotet/isogonal.hpp"
#include "isotet/quadric.hpp"

namespace isotet::detail {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<Vertex, 4> kVertices{Vertex::A, Vertex::B, Vertex::C, Vertex::D};
constexpr std::array<Axis, 3> kAxes{Axis::A, Axis::B, Axis::C};

constexpr int kMaxDraws = 1000;

// Repeats `draw` until it yields a value. Running out of draws is a trial
// failure, reported through the exception.
template <class F>
auto resample(F&& draw) {
  for (int i = 0; i < kMaxDraws; ++i)
    if (auto v = draw()) return *v;
  throw GeometryError(ErrorCode::BadInput, "sampler exhausted");
}

TrialOutcome verdict(double residual, double threshold, bool ok = true) {
  return {residual, !ok || !(residual <= threshold)};
}

Axis random_axis(TrialRng& rng) {
  return kAxes[std::min<std::size_t>(2, static_cast<std::size_t>(3.0 * rng.uniform()))];
}

double angle_at(const Vec3& apex, const Vec3& p, const Vec3& q) {
  const Vec3 u = p - apex, w = q - apex;
  return std::atan2(norm(cross(u, w)), dot(u, w));
}

double heron(double p, double q, double r) {
  const double s = 0.5 * (p + q + r);
  return std::sqrt(s * (s - p) * (s - q) * (s - r));
}

double min_vertex_distance(const Tetrahedron& t, const Vec3& x) {
  double best = INFINITY;
  for (const auto& v : t.vertices()) best = std::min(best, distance(v, x));
  return best;
}

double min_edge_distance(const Tetrahedron& t, const Vec3& x) {
  double best = INFINITY;
  for (const Edge& e : kEdges) best = std::min(best, t.edge_line(e).distance_to(x));
  return best;
}

double min_face_distance(const Tetrahedron& t, const Vec3& x) {
  double best = INFINITY;
  for (Vertex v : kVertices) best = std::min(best, std::abs(t.face_plane(v).signed_distance(x)));
  return best;
}

std::optional<Vec3> finite_conjugate(const Tetrahedron& t, const Vec3& p) {
  const auto r = isogonal_conjugate(t, p);
  if (const auto* f = std::get_if<FinitePoint>(&r)) return f->point;
  return std::nullopt;
}

// Random well-shaped triangle in a random plane, with its circumcircle.
struct Triangle {
  Vec3 a, b, c;
  Circle3 circ;
};

Triangle random_triangle(TrialRng& rng) {
  return resample([&]() -> std::optional<Triangle> {
    const RigidMotion m = random_rigid_motion(rng);
    const double r = rng.uniform(0.5, 3.0);
    std::array<Vec3, 3> p;
    for (auto& v : p) {
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      v = m.apply({r * std::cos(phi), r * std::sin(phi), 0.0});
    }
    for (std::size_t i = 0; i < 3; ++i)
      if (angle_at(p[i], p[(i + 1) % 3], p[(i + 2) % 3]) < 0.1) return std::nullopt;
    return Triangle{p[0], p[1], p[2], circle_through(p[0], p[1], p[2])};
  });
}

// Interior point from barycentrics bounded away from the sides.
Vec3 interior_point(TrialRng& rng, const Triangle& tri) {
  const double u = rng.uniform(0.05, 1.0), v = rng.uniform(0.05, 1.0), w = rng.uniform(0.05, 1.0);
  return (tri.a * u + tri.b * v + tri.c * w) / (u + v + w);
}

Vec3 planar_finite(const Triangle& tri, const Vec3& x) {
  const auto r = planar_isogonal_conjugate(tri.a, tri.b, tri.c, x);
  if (const auto* f = std::get_if<FinitePoint>(&r)) return f->point;
  throw GeometryError(ErrorCode::BadInput, "conjugate not finite");
}

// ---------------------------------------------------------------- P2.1

TrialOutcome p21_congruent(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const double big_r = frame.params.circumradius();
  const auto ref = face_sides(t, Vertex::A);
  double worst = 0.0;
  for (Vertex v : kVertices) {
    const auto s = face_sides(t, v);
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(s[i] - ref[i]) / big_r);
  }
  // Each edge subtends equal angles at the two remaining vertices.
  double angle_gap = 0.0;
  for (const Edge& e : kEdges) {
    const Edge o = opposite_edge(e);
    const Vec3& p = t.vertex(e.from);
    const Vec3& q = t.vertex(e.to);
    angle_gap = std::max(angle_gap, std::abs(angle_at(t.vertex(o.from), p, q) -
                                             angle_at(t.vertex(o.to), p, q)));
  }
  return verdict(worst, cfg.tol_pos, faces_congruent(t) && angle_gap <= cfg.tol_ang);
}

TrialOutcome p21_centers(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const double big_r = frame.params.circumradius();
  const double gap = distance(circumcenter(t), incenter(t)) / big_r;
  const double off = distance(circumcenter(t), frame.translation) / big_r;
  return verdict(std::max(gap, off), cfg.tol_pos);
}

TrialOutcome p21_acute(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const double excess = std::max(0.0, max_face_angle(t) - kPi / 2);
  return verdict(excess, cfg.tol_ang, faces_acute(t));
}

// ---------------------------------------------------------------- T3.1, C3.3, C3.4

struct ConjugatePair {
  Tetrahedron t;
  Vec3 p, q;
  double big_r;
  double scale;  // longest edge
};

// Every fourth trial is isosceles, the rest general. P stays off the faces
// and edgelines and its conjugate is finite and not too far out.
ConjugatePair random_pair(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const Tetrahedron t = index % 4 == 0 ? gen_isosceles(rng, cfg).first : gen_general_tetrahedron(rng);
  const Vec3 center = circumcenter(t);
  const double big_r = circumradius(t);
  const double l = t.max_edge();
  return resample([&]() -> std::optional<ConjugatePair> {
    const Vec3 p = center + rng.in_ball(2.0 * big_r);
    if (min_face_distance(t, p) < 0.02 * l || min_edge_distance(t, p) < 0.02 * l) return std::nullopt;
    const auto q = finite_conjugate(t, p);
    if (!q || distance(*q, center) > 10.0 * l) return std::nullopt;
    return ConjugatePair{t, p, *q, big_r, l};
  });
}

TrialOutcome t31_conjugate(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const auto pr = random_pair(rng, cfg, index);
  const double residual = isogonality_residual(pr.t, pr.p, pr.q);
  const auto back = finite_conjugate(pr.t, pr.q);
  const bool involution = back && distance(*back, pr.p) <= cfg.tol_pos * pr.big_r;
  return verdict(residual, cfg.tol_ang, involution);
}

TrialOutcome c33_eight_points(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const auto pr = random_pair(rng, cfg, index);
  const PedalSphere ps = pedal_sphere(pr.t, pr.p);
  const Vec3 mid = midpoint(pr.p, pr.q);
  const auto feet_q = face_projections(pr.t, pr.q);
  double worst = distance(ps.sphere.center, mid);
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(ps.sphere.radial_residual(ps.foot_points[i])));
    worst = std::max(worst, std::abs(ps.sphere.radial_residual(feet_q[i])));
    // The two feet on a face are the ends of a diameter of its section circle.
    const Vec3 section_center = project_point_plane(mid, pr.t.face_plane(kVertices[i]));
    worst = std::max(worst, distance(midpoint(ps.foot_points[i], feet_q[i]), section_center));
  }
  return verdict(worst / pr.big_r, cfg.tol_pos);
}

double sphere_gap(const Sphere& u, const Sphere& v) {
  return std::max(distance(u.center, v.center), std::abs(u.radius - v.radius));
}

TrialOutcome c34_pedal_equivalence(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const auto pr = random_pair(rng, cfg, index);
  const Sphere sp = pedal_sphere(pr.t, pr.p).sphere;
  const double gap = sphere_gap(sp, pedal_sphere(pr.t, pr.q).sphere) / pr.big_r;
  const bool isogonal = is_isogonal_pair(pr.t, pr.p, pr.q, cfg.tol_ang);

  // Moving Q off the conjugate must break both properties.
  const Vec3 moved = pr.q + rng.unit_vector() * (1e-3 * pr.scale);
  const double moved_gap = sphere_gap(sp, pedal_sphere(pr.t, moved).sphere) / pr.big_r;
  const bool moved_isogonal = is_isogonal_pair(pr.t, pr.p, moved, cfg.tol_ang);
  return verdict(gap, cfg.tol_pos, isogonal && moved_gap > cfg.tol_pos && !moved_isogonal);
}

// ---------------------------------------------------------------- P4.1 to P4.4

// Two spheres meeting at the angle `theta` between their outward normals.
std::pair<Sphere, Sphere> spheres_at_angle(TrialRng& rng, double theta) {
  const double r1 = rng.uniform(0.5, 2.0), r2 = rng.uniform(0.5, 2.0);
  const double d = std::sqrt(r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(theta));
  const Vec3 c1 = rng.in_box(3.0);
  return {Sphere::make(c1, r1), Sphere::make(c1 + rng.unit_vector() * d, r2)};
}

TrialOutcome p41_inversion(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const double theta = rng.uniform(0.15, kPi - 0.15);
  const auto [u, v] = spheres_at_angle(rng, theta);
  const Vec3 o = resample([&]() -> std::optional<Vec3> {
    const Vec3 c = midpoint(u.center, v.center) + rng.in_box(4.0);
    if (std::abs(u.radial_residual(c)) < 0.1 * u.radius ||
        std::abs(v.radial_residual(c)) < 0.1 * v.radius)
      return std::nullopt;
    return c;
  });
  const Inversion inv = Inversion::make(o, rng.sign() * rng.uniform(0.5, 4.0));
  const double before = sphere_angle(u, v);
  const double after = sphere_angle(invert_sphere(inv, u), invert_sphere(inv, v));
  // A center inside exactly one sphere turns that sphere inside out.
  const bool flips = (u.radial_residual(o) < 0) != (v.radial_residual(o) < 0);
  const double expected = flips ? kPi - before : before;
  const double residual = std::max(std::abs(after - expected), std::abs(before - theta));
  return verdict(residual, cfg.tol_ang);
}

TrialOutcome p42_bisector_sphere(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const double big_r = rng.uniform(0.5, 3.0);
  const Sphere omega = Sphere::make(rng.in_box(5.0), big_r);
  const Vec3 n = rng.unit_vector();
  const double h = rng.sign() * rng.uniform(0.05, 0.95) * big_r;
  const Circle3 sigma = Circle3::make(omega.center + n * h, std::sqrt((big_r - h) * (big_r + h)), n);
  const auto [near, far] = bisector_spheres(omega, sigma);
  double on_omega = 0.0, angle_gap = 0.0;
  for (const Sphere& g : {near, far}) {
    on_omega = std::max(on_omega, std::abs(omega.radial_residual(g.center)) / big_r);
    angle_gap = std::max(angle_gap, compare_angles(sphere_angle(g, omega),
                                                   sphere_angle(g, sigma.plane())).residual);
    // The sphere passes through the circle.
    on_omega = std::max(on_omega, std::abs(g.radial_residual(sigma.point_at(1.0))) / big_r);
  }
  return verdict(on_omega, cfg.tol_pos, angle_gap <= cfg.tol_ang);
}

// Relabels the triangle so that `side` plays the role of AB.
Triangle rotate_labels(const Triangle& tri, int side) {
  if (side == 1) return {tri.b, tri.c, tri.a, tri.circ};
  if (side == 2) return {tri.c, tri.a, tri.b, tri.circ};
  return tri;
}


Vec3 triangle_incenter(const Triangle& tri) {
  const double la = distance(tri.b, tri.c), lb = distance(tri.c, tri.a), lc = distance(tri.a, tri.b);
  return (tri.a * la + tri.b * lb + tri.c * lc) / (la + lb + lc);
}

TrialOutcome p43_equal_angles(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const Triangle base = random_triangle(rng);
  const Vec3 x = interior_point(rng, base);
  const Vec3 y = planar_finite(base, x);
  const Vec3 in = triangle_incenter(base);
  double worst = 0.0;
  bool incenter_ok = true;
  for (int side = 0; side < 3; ++side) {
    const Triangle tri = rotate_labels(base, side);
    const auto arcs = arc_midpoint_circles(tri.a, tri.b, tri.c);
    const Circle3 abx = circle_through(tri.a, tri.b, x);
    const Circle3 aby = circle_through(tri.a, tri.b, y);
    for (const Circle3& g : {arcs.gamma_m, arcs.gamma_n})
      worst = std::max(worst, compare_angles(circle_angle(g, abx), circle_angle(g, aby)).residual);
    incenter_ok = incenter_ok && std::abs(distance(in, arcs.m) - arcs.gamma_m.radius) <=
                                     cfg.tol_pos * base.circ.radius;
  }
  return verdict(worst, cfg.tol_ang, incenter_ok);
}

TrialOutcome p43_homothety(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const Triangle tri = random_triangle(rng);
  const auto circles = resample([&]() -> std::optional<std::pair<Circle3, Circle3>> {
    const Vec3 x = interior_point(rng, tri);
    const Circle3 u = circle_through(tri.a, tri.b, x);
    const Circle3 v = circle_through(tri.a, tri.b, planar_finite(tri, x));
    if (std::abs(u.radius - v.radius) < 1e-3 * std::max(u.radius, v.radius)) return std::nullopt;
    return std::pair{u, v};
  });
  const auto& [u, v] = circles;
  const auto centers = homothety_centers({u.center, u.radius}, {v.center, v.radius});
  const auto arcs = arc_midpoint_circles(tri.a, tri.b, tri.c);
  const auto* external = std::get_if<Vec3>(&centers.external);
  if (external == nullptr) return {0.0, true};
  const double gap = std::max(distance(*external, arcs.n), distance(centers.internal, arcs.m));
  const double longest = max_pairwise_distance({tri.a, tri.b, tri.c});
  return {gap / tri.circ.radius, !(gap <= 10.0 * cfg.tol_pos * longest)};
}

TrialOutcome p44_homothety_sphere(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto [u, v] = resample([&]() -> std::optional<std::pair<Sphere, Sphere>> {
    const double r1 = rng.uniform(0.5, 2.0), r2 = rng.uniform(0.5, 2.0);
    if (std::abs(r1 - r2) < 0.05 * std::max(r1, r2)) return std::nullopt;
    const double lo = std::abs(r1 - r2), hi = r1 + r2;
    const double d = rng.uniform(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
    const Vec3 c = rng.in_box(3.0);
    return std::pair{Sphere::make(c, r1), Sphere::make(c + rng.unit_vector() * d, r2)};
  });
  const Sphere g = homothety_bisector_sphere(u, v);
  return verdict(compare_angles(sphere_angle(g, u), sphere_angle(g, v)).residual, cfg.tol_ang);
}

// ---------------------------------------------------------------- P5.1, L5.3

double relative_gap(double value, double expected) {
  return std::abs(value - expected) / std::abs(expected);
}

TrialOutcome p51_quantities(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const auto q = quantities(frame.params);
  const auto s = face_sides(t, Vertex::D);
  // Dihedral at CD from the outward normals of ACD and BCD.
  const Vec3 na = t.face_plane(Vertex::A).normal, nb = t.face_plane(Vertex::B).normal;
  const double dihedral = kPi - std::atan2(norm(cross(na, nb)), dot(na, nb));
  double worst = relative_gap(q.face_area, heron(s[0], s[1], s[2]));
  for (Vertex v : kVertices) {
    const double h = std::abs(t.face_plane(v).signed_distance(frame.translation));
    worst = std::max(worst, relative_gap(q.center_to_face, h));
  }
  worst = std::max(worst, relative_gap(q.sin_half_dihedral, std::sin(dihedral / 2)));
  worst = std::max(worst, relative_gap(q.circumradius, circumradius(t)));

  bool golden_ok = true;
  if (index == 0) {
    const auto g = quantities(IsoscelesParams::make(1, 2, 3));
    golden_ok = relative_gap(g.face_area, 14.0) <= 1e-12 &&
                relative_gap(g.center_to_face, 6.0 / 7.0) <= 1e-12 &&
                relative_gap(g.sin_half_dihedral, 2.0 / 7.0) <= 1e-12;
  }
  return verdict(worst, cfg.tol_pos, golden_ok);
}

TrialOutcome l53_equidistant(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const double big_r = frame.params.circumradius();
  const Vec3 x = frame.translation + rng.in_ball(2.0 * big_r);
  double worst = 0.0;
  for (Axis axis : kAxes) worst = std::max(worst, equidistant_projection_residual(t, axis, x));
  return verdict(worst / big_r, cfg.tol_pos);
}

// ---------------------------------------------------------------- T5.4

struct SurfacePair {
  Tetrahedron t;
  CanonicalFrame frame;
  HyperbolicParaboloid h;
  Vec3 p, mirror;
};

// P on the axis surface, with P and its mirror kept 1e-6 L away from the
// vertices, the edgelines and the axis.
SurfacePair random_surface_pair(TrialRng& rng, const TrialConfig& cfg) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const Axis axis = random_axis(rng);
  const auto h = hpar(frame, axis);
  const double big_r = frame.params.circumradius();
  const double margin = 1e-6 * t.max_edge();
  const Line3 axis_line = bimedian(t, axis);
  return resample([&]() -> std::optional<SurfacePair> {
    const Vec3 p = h.point(rng.uniform(-big_r, big_r), rng.uniform(-big_r, big_r));
    const Vec3 m = conjugate_pair_on_hpar(frame, axis, p).second;
    for (const Vec3& x : {p, m})
      if (min_vertex_distance(t, x) < margin || min_edge_distance(t, x) < margin ||
          axis_line.distance_to(x) < margin)
        return std::nullopt;
    return SurfacePair{t, frame, h, p, m};
  });
}

TrialOutcome t54_forward(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto sp = random_surface_pair(rng, cfg);
  const double residual = isogonality_residual(sp.t, sp.p, sp.mirror);
  const double big_r = sp.frame.params.circumradius();

  // Pedal-distance identity at a random canonical point.
  const Vec3 c = rng.in_ball(2.0 * big_r);
  const auto& pr = sp.frame.params;
  const double identity_scale = std::abs(c.x * c.y / (pr.a * pr.b)) + std::abs(c.z / pr.c);
  const bool identity_ok =
      std::abs(pedal_distance_identity(pr, c) * pedal_distance_factor(pr) -
               pedal_distance_closed_form(pr, c)) <= 1e-10 * identity_scale;

  // Vertices lie on all three surfaces; each surface holds the other two bimedians.
  bool incidence_ok = true;
  for (Axis axis : kAxes) {
    const auto h = hpar(sp.frame, axis);
    for (const auto& v : sp.t.vertices())
      incidence_ok = incidence_ok && std::abs(hpar_residual(h, v)) <= 1e-12 * big_r;
    for (Axis other : kAxes) {
      if (other == axis) continue;
      const Vec3 on_line = bimedian(sp.t, other).at(rng.uniform(-2.0, 2.0) * big_r);
      incidence_ok = incidence_ok && std::abs(hpar_residual(h, on_line)) <= 1e-12 * big_r;
    }
  }
  return verdict(residual, cfg.tol_ang,
                 is_isogonal_pair(sp.t, sp.p, sp.mirror, cfg.tol_ang) && identity_ok && incidence_ok);
}

TrialOutcome t54_converse(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto sp = random_surface_pair(rng, cfg);
  const auto q = finite_conjugate(sp.t, sp.p);
  if (!q) return {0.0, true};
  const double big_r = sp.frame.params.circumradius();
  const bool symmetric = distance(*q, sp.mirror) <= 1e-6 * sp.t.max_edge();
  const double residual =
      std::max(std::abs(hpar_residual(sp.h, sp.p)), std::abs(hpar_residual(sp.h, *q))) / big_r;
  return verdict(residual, cfg.tol_pos, symmetric);
}

// ---------------------------------------------------------------- P5.6

TrialOutcome p56_tangency(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const auto& params = frame.params;
  const Tetrahedron canon = canonical_embedding(params);
  const Axis axis = random_axis(rng);
  const auto ax = AxisCoords::of(params, axis);
  const double big_r = params.circumradius();
  const bool on_surface = index % 2 == 0;
  const Vec3 pt = resample([&]() -> std::optional<Vec3> {
    const Vec3 x = on_surface ? sphere_hpar_point(params, axis, rng.uniform(-1.0, 1.0), rng.sign() > 0)
                              : rng.unit_vector() * big_r;
    if (min_vertex_distance(canon, x) < 0.01 * big_r) return std::nullopt;
    const Vec3 l = ax.local(x);
    if (!on_surface && std::abs(ax.p * ax.q * l.z + l.x * l.y * ax.s) < 1e-3 * big_r * big_r * big_r)
      return std::nullopt;
    return x;
  });
  const double scale = (ax.p * ax.p + ax.q * ax.q) * big_r * big_r * big_r;
  const double det = tangency_det(params, pt, axis);
  const double rel = std::abs(det - tangency_det_factored(params, pt, axis)) / scale;
  const bool det_zero = std::abs(det) < 1e-8 * scale;
  const bool touch = circles_touch(t, frame.to_world(pt), axis);
  return verdict(rel, 1e-9, touch == on_surface && det_zero == on_surface);
}

// ---------------------------------------------------------------- T6.1, P6.2

Vec3 sphere_point_off_vertices(TrialRng& rng, const Tetrahedron& t, const Sphere& omega) {
  return resample([&]() -> std::optional<Vec3> {
    const Vec3 x = gen_point_on_sphere(rng, omega);
    if (min_vertex_distance(t, x) < 0.01 * omega.radius) return std::nullopt;
    return x;
  });
}

TrialOutcome t61_on_sphere(TrialRng& rng, const TrialConfig& cfg, std::size_t) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const Sphere omega{frame.translation, frame.params.circumradius()};
  const Vec3 x = sphere_point_off_vertices(rng, t, omega);
  const auto y = finite_conjugate(t, x);
  if (!y) return {0.0, true};

  // In a triangle, circumcircle points have no finite conjugate.
  const Triangle tri = random_triangle(rng);
  const Vec3 z = resample([&]() -> std::optional<Vec3> {
    const Vec3 c = tri.circ.point_at(rng.uniform(0.0, 2.0 * kPi));
    if (std::min({distance(c, tri.a), distance(c, tri.b), distance(c, tri.c)}) <
        0.01 * tri.circ.radius)
      return std::nullopt;
    return c;
  });
  const bool planar_infinite =
      std::holds_alternative<AtInfinity>(planar_isogonal_conjugate(tri.a, tri.b, tri.c, z));
  return verdict(std::abs(omega.radial_residual(*y)) / omega.radius, cfg.tol_pos, planar_infinite);
}

TrialOutcome p62_bogdanov(TrialRng& rng, const TrialConfig& cfg, std::size_t index) {
  const auto [t, frame] = gen_isosceles(rng, cfg);
  const Sphere omega{frame.translation, frame.params.circumradius()};
  Vec3 x;
  if (index % 5 == 0) {
    // On the surface of one axis, where that axis takes the tangent branch.
    const Axis axis = random_axis(rng);
    x = resample([&]() -> std::optional<Vec3> {
      const Vec3 c = frame.to_world(
          sphere_hpar_point(frame.params, axis, rng.uniform(-1.0, 1.0), rng.sign() > 0));
      if (min_vertex_distance(t, c) < 0.01 * omega.radius) return std::nullopt;
      return c;
    });
  } else {
    x = sphere_point_off_vertices(rng, t, omega);
  }
  const auto direct = finite_conjugate(t, x);
  if (!direct) return {0.0, true};
  std::array<Vec3, 4> ys{*direct, bogdanov_conjugate(t, x, Axis::A),
                         bogdanov_conjugate(t, x, Axis::B), bogdanov_conjugate(t, x, Axis::C)};
  double spread = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) spread = std::max(spread, distance(ys[i], ys[j]));
  return verdict(spread / omega.radius, 10.0 * cfg.tol_pos);
}

// ---------------------------------------------------------------- registry

constexpr std::string_view kLength = "length/R";
constexpr std::string_view kRadians = "radians";

const std::vector<Suite> kSuites{
    {"P2.1i", kLength, p21_congruent},
    {"P2.1ii", kLength, p21_centers},
    {"P2.1iii", kRadians, p21_acute},
    {"T3.1", kRadians, t31_conjugate},
    {"C3.3", kLength, c33_eight_points},
    {"C3.4", kLength, c34_pedal_equivalence},
    {"P4.1", kRadians, p41_inversion},
    {"P4.2", kLength, p42_bisector_sphere},
    {"P4.3i", kRadians, p43_equal_angles},
    {"P4.3ii", kLength, p43_homothety},
    {"P4.4", kRadians, p44_homothety_sphere},
    {"P5.1", kLength, p51_quantities},
    {"L5.3", kLength, l53_equidistant},
    {"T5.4fwd", kRadians, t54_forward},
    {"T5.4conv", kLength, t54_converse},
    {"P5.6", kLength, p56_tangency},
    {"T6.1", kLength, t61_on_sphere},
    {"P6.2", kLength, p62_bogdanov},
};

}  // namespace

const std::vector<Suite>& suite_table() { return kSuites; }

}  // namespace isotet::detail
