#include "isotet/circlesphere.hpp"

#include <algorithm>
#include <numbers>

namespace isotet {
namespace {

// Area of a triangle with the given side lengths, stable for needles.
double heron_area(double p, double q, double r) {
  std::array<double, 3> s{p, q, r};
  std::sort(s.begin(), s.end(), std::greater<>());
  const auto [a, b, c] = s;
  const double prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(prod, 0.0));
}

double sphere_sphere_angle(const Sphere& u, const Sphere& v, double eps_rel) {
  const double d = distance(u.center, v.center);
  const double r1 = u.radius, r2 = v.radius;
  const double slack = eps_rel * std::max(r1, r2);
  if (d > r1 + r2 + slack || d < std::abs(r1 - r2) - slack) throw GeometryError(ErrorCode::Disjoint);
  const double cosine = (r1 * r1 + r2 * r2 - d * d) / (2.0 * r1 * r2);
  const double sine = 2.0 * heron_area(r1, r2, d) / (r1 * r2);
  return std::atan2(sine, cosine);
}

double sphere_plane_angle(const Sphere& s, const Plane& pl, double eps_rel) {
  const double h = pl.signed_distance(s.center);
  const double r = s.radius;
  if (std::abs(h) > r * (1.0 + eps_rel)) throw GeometryError(ErrorCode::Disjoint);
  const double ah = std::min(std::abs(h), r);
  return std::atan2(std::sqrt((r - ah) * (r + ah)), h);
}

double plane_plane_angle(const Plane& p, const Plane& q, double eps_rel) {
  const double sine = norm(cross(p.normal, q.normal));
  const double cosine = dot(p.normal, q.normal);
  if (sine <= eps_rel) {
    const double gap = cosine > 0 ? p.offset - q.offset : p.offset + q.offset;
    if (std::abs(gap) > eps_rel * std::max({1.0, std::abs(p.offset), std::abs(q.offset)}))
      throw GeometryError(ErrorCode::Disjoint);
  }
  return std::atan2(sine, cosine);
}

// Signed area coordinate of x against the edge (p, q), w.r.t. normal n.
double signed_area(const Vec3& x, const Vec3& p, const Vec3& q, const Vec3& n) {
  return 0.5 * dot(cross(p - x, q - x), n);
}

Vec3 reflect_direction(const Vec3& d, const Vec3& axis) {
  return axis * (2.0 * dot(d, axis)) - d;
}

}  // namespace

Inversion Inversion::make(const Vec3& center, double power) {
  if (power == 0.0 || !std::isfinite(power)) throw GeometryError(ErrorCode::BadInput, "zero inversion power");
  return {center, power};
}

Vec3 invert_point(const Inversion& inv, const Vec3& p) {
  const Vec3 d = p - inv.center;
  const double d2 = norm2(d);
  if (!(std::sqrt(d2) > 1e-12 * std::sqrt(std::abs(inv.power))))
    throw GeometryError(ErrorCode::CenterInput);
  return inv.center + d * (inv.power / d2);
}

SphereOrPlane invert_sphere(const Inversion& inv, const SphereOrPlane& s, double eps_rel) {
  const double k = inv.power;
  if (const auto* sp = std::get_if<Sphere>(&s)) {
    const Vec3 d = sp->center - inv.center;
    const double dist = norm(d);
    const double r = sp->radius;
    if (std::abs(dist - r) <= eps_rel * r) {
      // Through the center: |y|^2 = 2 y.d maps to the plane y'.d = k / 2.
      const Vec3 n = d / dist;
      return Plane{n, dot(n, inv.center) + k / (2.0 * dist)};
    }
    const double pow_center = (dist - r) * (dist + r);
    return Sphere{inv.center + d * (k / pow_center), std::abs(k) * r / std::abs(pow_center)};
  }
  const auto& pl = std::get<Plane>(s);
  const double h = pl.signed_distance(inv.center);
  if (std::abs(h) <= eps_rel * std::max(1.0, std::sqrt(std::abs(k)))) return pl;
  // n.y = -h (y relative to the center) maps to a sphere through the center.
  const double t = -h;
  return Sphere{inv.center + pl.normal * (k / (2.0 * t)), std::abs(k) / (2.0 * std::abs(t))};
}

double sphere_angle(const SphereOrPlane& u, const SphereOrPlane& v, double eps_rel) {
  const auto* su = std::get_if<Sphere>(&u);
  const auto* sv = std::get_if<Sphere>(&v);
  if (su && sv) return sphere_sphere_angle(*su, *sv, eps_rel);
  if (su) return sphere_plane_angle(*su, std::get<Plane>(v), eps_rel);
  if (sv) return sphere_plane_angle(*sv, std::get<Plane>(u), eps_rel);
  return plane_plane_angle(std::get<Plane>(u), std::get<Plane>(v), eps_rel);
}

double circle_angle(const Circle3& u, const Circle3& v, double eps_rel) {
  return sphere_sphere_angle({u.center, u.radius}, {v.center, v.radius}, eps_rel);
}

AngleMatch compare_angles(double theta1, double theta2) {
  const double direct = std::abs(theta1 - theta2);
  const double supp = std::abs(theta1 - (std::numbers::pi - theta2));
  return {std::min(direct, supp), supp < direct};
}

std::pair<Sphere, Sphere> bisector_spheres(const Sphere& omega, const Circle3& sigma,
                                           double eps_rel) {
  const double big_r = omega.radius;
  const Vec3 off = sigma.center - omega.center;
  const double h = dot(off, sigma.normal);
  const double lateral = norm(off - sigma.normal * h);
  if (lateral > eps_rel * big_r ||
      std::abs(std::hypot(h, sigma.radius) - big_r) > eps_rel * big_r)
    throw GeometryError(ErrorCode::NotOnSphere);
  if (std::abs(h) <= eps_rel * big_r) throw GeometryError(ErrorCode::GreatCircle);

  const Vec3 up = sigma.normal * (h > 0 ? 1.0 : -1.0);
  const double ah = std::abs(h);
  const Vec3 near_center = omega.center + up * big_r;
  const Vec3 far_center = omega.center - up * big_r;
  return {Sphere{near_center, std::hypot(big_r - ah, sigma.radius)},
          Sphere{far_center, std::hypot(big_r + ah, sigma.radius)}};
}

HomothetyCenters homothety_centers(const Sphere& u, const Sphere& v, double eps_rel) {
  const double r1 = u.radius, r2 = v.radius;
  const double slack = eps_rel * std::max(r1, r2);
  const double d = distance(u.center, v.center);
  const bool same_radius = std::abs(r1 - r2) <= slack;
  if (same_radius && d <= slack) throw GeometryError(ErrorCode::IdenticalSpheres);

  HomothetyCenters out{AtInfinity{}, (u.center * r2 + v.center * r1) / (r1 + r2)};
  if (same_radius)
    out.external = AtInfinity{normalized(v.center - u.center)};
  else
    out.external = (u.center * r2 - v.center * r1) / (r2 - r1);
  return out;
}

Circle3 sphere_intersection_circle(const Sphere& u, const Sphere& v, double eps_rel) {
  const double r1 = u.radius, r2 = v.radius;
  const double d = distance(u.center, v.center);
  const double slack = eps_rel * std::max(r1, r2);
  if (!(d < r1 + r2 - slack && d > std::abs(r1 - r2) + slack))
    throw GeometryError(ErrorCode::Disjoint);
  const Vec3 axis = (v.center - u.center) / d;
  const double along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double rho = 2.0 * heron_area(r1, r2, d) / d;
  return {u.center + axis * along, rho, axis};
}

Sphere homothety_bisector_sphere(const Sphere& u, const Sphere& v, double eps_rel) {
  const Circle3 sigma = sphere_intersection_circle(u, v, eps_rel);
  const auto centers = homothety_centers(u, v, eps_rel);
  const auto* s = std::get_if<Vec3>(&centers.external);
  if (s == nullptr) throw GeometryError(ErrorCode::EqualRadii);
  return {*s, distance(*s, sigma.point_at(0.0))};
}

PlanarConjugate planar_isogonal_conjugate(const Vec3& a, const Vec3& b, const Vec3& c,
                                          const Vec3& x, double eps_rel) {
  if (collinear(a, b, c, eps_rel)) throw GeometryError(ErrorCode::DegenerateTriangle);
  const Plane pl = plane_through(a, b, c, eps_rel);
  const double scale = max_pairwise_distance({a, b, c});
  if (std::abs(pl.signed_distance(x)) > eps_rel * scale) throw GeometryError(ErrorCode::NotCoplanar);

  const std::array<Vec3, 3> v{a, b, c};
  for (std::size_t i = 0; i < 3; ++i)
    if (distance(x, v[i]) < kVertexSnapRel * scale) return VertexDegenerate{static_cast<Vertex>(i)};

  // Cevian directions reflected in the internal angle bisectors.
  std::array<Vec3, 3> iso;
  bool on_sideline = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3& p = v[i];
    const Vec3& q = v[(i + 1) % 3];
    const Vec3& r = v[(i + 2) % 3];
    const Vec3 bis = normalized(normalized(q - p) + normalized(r - p));
    iso[i] = reflect_direction(normalized(x - p), bis);
    on_sideline = on_sideline || Line3::through(q, r - q).distance_to(x) < kEdgeSnapRel * scale;
  }
  if (!on_sideline) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      worst = std::max(worst, std::asin(std::min(1.0, norm(cross(iso[i], iso[(i + 1) % 3])))));
    if (worst < kParallelCevianRad) return AtInfinity{iso[0]};
  }

  // Barycentrics (alpha : beta : gamma) map to (a^2/alpha : b^2/beta : c^2/gamma).
  const Vec3 n = pl.normal;
  const double alpha = signed_area(x, b, c, n);
  const double beta = signed_area(x, c, a, n);
  const double gamma = signed_area(x, a, b, n);
  const double la = norm2(b - c), lb = norm2(c - a), lc = norm2(a - b);
  const double wa = la * beta * gamma, wb = lb * gamma * alpha, wc = lc * alpha * beta;
  const double total = wa + wb + wc;
  if (total == 0.0) return AtInfinity{iso[0]};
  return FinitePoint{(a * wa + b * wb + c * wc) / total};
}

ArcMidpointCircles arc_midpoint_circles(const Vec3& a, const Vec3& b, const Vec3& c) {
  Circle3 circ;
  try {
    circ = circle_through(a, b, c);
  } catch (const GeometryError&) {
    throw GeometryError(ErrorCode::DegenerateTriangle);
  }
  const Vec3 chord_mid = midpoint(a, b);
  const Vec3 toward = chord_mid - circ.center;
  // A diameter AB leaves the bisector direction to the in-plane normal.
  const Vec3 w = norm(toward) > 1e-12 * circ.radius ? normalized(toward)
                                                    : normalized(cross(circ.normal, b - a));
  Vec3 m = circ.center + w * circ.radius;
  Vec3 n = circ.center - w * circ.radius;
  auto side = [&](const Vec3& p) { return dot(cross(b - a, p - a), circ.normal); };
  if (side(m) * side(c) > 0) std::swap(m, n);
  return {Circle3{m, distance(m, a), circ.normal}, Circle3{n, distance(n, a), circ.normal}, m, n};
}

}  // namespace isotet
