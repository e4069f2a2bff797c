#pragma once

// Scale-aware 3D primitives. Every value type here is immutable after
// construction and every operation is a pure function.

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "isotet/error.hpp"

namespace isotet {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr double operator[](std::size_t i) const {
    return i == 0 ? x : (i == 1 ? y : z);
  }

  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3& a, double s) {
    return {a.x / s, a.y / s, a.z / s};
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
constexpr Vec3 midpoint(const Vec3& a, const Vec3& b) { return (a + b) * 0.5; }
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}
inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}
// Throws BadInput for a zero vector.
Vec3 normalized(const Vec3& a);
// Some unit vector perpendicular to `a` (a != 0).
Vec3 any_perpendicular(const Vec3& a);

// Row-major 3x3 matrix, used for rigid rotations.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  // Rotation from a (not necessarily unit) quaternion w + xi + yj + zk.
  static Mat3 from_quaternion(double w, double x, double y, double z);

  double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  Vec3 column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
  Mat3 transposed() const;
  double det() const;

  friend Vec3 operator*(const Mat3& a, const Vec3& v);
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
};

// A rigid motion x -> rotation * x + translation.
struct RigidMotion {
  Mat3 rotation;
  Vec3 translation;

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 apply_direction(const Vec3& d) const { return rotation * d; }
  Vec3 inverse_apply(const Vec3& p) const {
    return rotation.transposed() * (p - translation);
  }
};

// Relative comparison policy. Absolute thresholds are eps_rel * length_scale
// (or the matching power of it).
class Tolerance {
 public:
  static constexpr double kDefaultEpsRel = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double length_scale, double eps_rel = kDefaultEpsRel);

  double eps_rel() const { return eps_rel_; }
  double length_scale() const { return length_scale_; }
  double length() const { return eps_rel_ * length_scale_; }
  Tolerance with_scale(double length_scale) const {
    return Tolerance(length_scale, eps_rel_);
  }

 private:
  double eps_rel_ = kDefaultEpsRel;
  double length_scale_ = 1.0;
};

struct Line3 {
  Vec3 point;
  Vec3 direction;  // unit

  // Normalizes `direction`; throws BadInput on a zero direction.
  static Line3 through(const Vec3& p, const Vec3& direction);
  Vec3 at(double t) const { return point + direction * t; }
  Vec3 closest_point(const Vec3& p) const {
    return point + direction * dot(p - point, direction);
  }
  double distance_to(const Vec3& p) const { return norm(p - closest_point(p)); }
};

// Points x with dot(normal, x) == offset.
struct Plane {
  Vec3 normal;  // unit
  double offset = 0.0;

  // Normalizes the inputs; throws BadInput on a zero normal.
  static Plane from_normal_point(const Vec3& normal, const Vec3& point);
  static Plane from_equation(double a, double b, double c, double d);  // ax+by+cz+d=0

  double signed_distance(const Vec3& p) const { return dot(normal, p) - offset; }
  Vec3 any_point() const { return normal * offset; }
};

struct Sphere {
  Vec3 center;
  double radius = 1.0;

  // Throws BadInput unless radius > 0.
  static Sphere make(const Vec3& center, double radius);
  double radial_residual(const Vec3& p) const { return distance(p, center) - radius; }
};

struct Circle3 {
  Vec3 center;
  double radius = 1.0;
  Vec3 normal;  // unit

  static Circle3 make(const Vec3& center, double radius, const Vec3& normal);
  Plane plane() const { return Plane::from_normal_point(normal, center); }
  // Point at angle `t` in the circle's plane, measured from an arbitrary
  // but fixed in-plane axis.
  Vec3 point_at(double t) const;
  // Unit tangent at a point of the circle.
  Vec3 tangent_at(const Vec3& p) const { return normalized(cross(normal, p - center)); }
};

// A point at infinity, reached along `direction` (unit).
struct AtInfinity {
  Vec3 direction;
};

double max_pairwise_distance(std::initializer_list<Vec3> pts);

Vec3 reflect_point_plane(const Vec3& p, const Plane& pl);
Vec3 project_point_plane(const Vec3& p, const Plane& pl);
Vec3 reflect_point_line(const Vec3& p, const Line3& l);

// Collinearity test: triangle area <= eps_rel * L^2 with L the largest
// pairwise distance.
bool collinear(const Vec3& p0, const Vec3& p1, const Vec3& p2,
               double eps_rel = Tolerance::kDefaultEpsRel);
// Coplanarity test: |det(p1-p0, p2-p0, p3-p0)| <= eps_rel * L^3.
bool coplanar(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3,
              double eps_rel = Tolerance::kDefaultEpsRel);

// Normal follows the winding p0 -> p1 -> p2. Throws CollinearPoints.
Plane plane_through(const Vec3& p0, const Vec3& p1, const Vec3& p2,
                    double eps_rel = Tolerance::kDefaultEpsRel);
// Throws CollinearPoints.
Circle3 circle_through(const Vec3& p0, const Vec3& p1, const Vec3& p2,
                       double eps_rel = Tolerance::kDefaultEpsRel);
// Throws CoplanarPoints.
Sphere circumsphere4(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3,
                     double eps_rel = Tolerance::kDefaultEpsRel);

// 0, 1 (tangency within tolerance) or 2 points, ordered along the line.
std::vector<Vec3> line_sphere_intersection(const Line3& l, const Sphere& s,
                                           double eps_rel = Tolerance::kDefaultEpsRel);
// Throws ParallelPlanes.
Line3 plane_plane_intersection(const Plane& p1, const Plane& p2,
                               double eps_rel = Tolerance::kDefaultEpsRel);

// Unit normal of the least-squares plane through `pts`.
Vec3 best_fit_normal(const std::vector<Vec3>& pts);

}  // namespace isotet
