#include "isotet/geom3.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace isotet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::CoplanarPoints: return "CoplanarPoints";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotIsosceles: return "NotIsosceles";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::DegenerateTetrahedron: return "DegenerateTetrahedron";
    case ErrorCode::DegenerateProjections: return "DegenerateProjections";
    case ErrorCode::PointOnEdgeLine: return "PointOnEdgeLine";
    case ErrorCode::CenterInput: return "CenterInput";
    case ErrorCode::Disjoint: return "Disjoint";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::GreatCircle: return "GreatCircle";
    case ErrorCode::IdenticalSpheres: return "IdenticalSpheres";
    case ErrorCode::EqualRadii: return "EqualRadii";
    case ErrorCode::NotCoplanar: return "NotCoplanar";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotOnSurface: return "NotOnSurface";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::VertexInput: return "VertexInput";
    case ErrorCode::NotThroughX: return "NotThroughX";
    case ErrorCode::CoincidentCircles: return "CoincidentCircles";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::BadSurfaceId: return "BadSurfaceId";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError(ErrorCode::BadInput, "cannot normalize a zero vector");
  }
  return a / n;
}

Vec3 any_perpendicular(const Vec3& a) {
  // Cross with the axis least aligned with `a`.
  const double ax = std::abs(a.x), ay = std::abs(a.y), az = std::abs(a.z);
  const Vec3 axis = (ax <= ay && ax <= az) ? Vec3{1, 0, 0}
                    : (ay <= az)           ? Vec3{0, 1, 0}
                                           : Vec3{0, 0, 1};
  return normalized(cross(a, axis));
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 r;
  r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
  return r;
}

Mat3 Mat3::from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n; x /= n; y /= n; z /= n;
  Mat3 r;
  r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
         2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[static_cast<std::size_t>(3 * i + j)] = (*this)(j, i);
  return r;
}

double Mat3::det() const {
  return triple(column(0), column(1), column(2));
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  return Mat3::from_columns(a * b.column(0), a * b.column(1), a * b.column(2));
}

Tolerance::Tolerance(double length_scale, double eps_rel)
    : eps_rel_(eps_rel), length_scale_(length_scale) {
  if (!(eps_rel > 0.0 && eps_rel <= 1e-3)) {
    throw GeometryError(ErrorCode::InvalidTolerance, "eps_rel must lie in (0, 1e-3]");
  }
  if (!(length_scale > 0.0) || !std::isfinite(length_scale)) {
    throw GeometryError(ErrorCode::InvalidTolerance, "length_scale must be positive");
  }
}

Line3 Line3::through(const Vec3& p, const Vec3& direction) {
  return {p, normalized(direction)};
}

Plane Plane::from_normal_point(const Vec3& normal, const Vec3& point) {
  const Vec3 n = normalized(normal);
  return {n, dot(n, point)};
}

Plane Plane::from_equation(double a, double b, double c, double d) {
  const Vec3 n{a, b, c};
  const double len = norm(n);
  if (!(len > 0.0)) throw GeometryError(ErrorCode::BadInput, "zero plane normal");
  return {n / len, -d / len};
}

Sphere Sphere::make(const Vec3& center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center)) {
    throw GeometryError(ErrorCode::BadInput, "sphere radius must be positive");
  }
  return {center, radius};
}

Circle3 Circle3::make(const Vec3& center, double radius, const Vec3& normal) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(ErrorCode::BadInput, "circle radius must be positive");
  }
  return {center, radius, normalized(normal)};
}

Vec3 Circle3::point_at(double t) const {
  const Vec3 u = any_perpendicular(normal);
  const Vec3 v = cross(normal, u);
  return center + (u * std::cos(t) + v * std::sin(t)) * radius;
}

double max_pairwise_distance(std::initializer_list<Vec3> pts) {
  double best = 0.0;
  for (auto i = pts.begin(); i != pts.end(); ++i)
    for (auto j = std::next(i); j != pts.end(); ++j) best = std::max(best, distance(*i, *j));
  return best;
}

Vec3 reflect_point_plane(const Vec3& p, const Plane& pl) {
  return p - pl.normal * (2.0 * pl.signed_distance(p));
}

Vec3 project_point_plane(const Vec3& p, const Plane& pl) {
  return p - pl.normal * pl.signed_distance(p);
}

Vec3 reflect_point_line(const Vec3& p, const Line3& l) {
  return l.closest_point(p) * 2.0 - p;
}

bool collinear(const Vec3& p0, const Vec3& p1, const Vec3& p2, double eps_rel) {
  const double scale = max_pairwise_distance({p0, p1, p2});
  const double area = 0.5 * norm(cross(p1 - p0, p2 - p0));
  return !(area > eps_rel * scale * scale);
}

bool coplanar(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3,
              double eps_rel) {
  const double scale = max_pairwise_distance({p0, p1, p2, p3});
  const double vol6 = std::abs(triple(p1 - p0, p2 - p0, p3 - p0));
  return !(vol6 > eps_rel * scale * scale * scale);
}

Plane plane_through(const Vec3& p0, const Vec3& p1, const Vec3& p2, double eps_rel) {
  if (collinear(p0, p1, p2, eps_rel)) throw GeometryError(ErrorCode::CollinearPoints);
  const Vec3 n = normalized(cross(p1 - p0, p2 - p0));
  // Offset from the centroid keeps all three residuals balanced.
  return {n, dot(n, (p0 + p1 + p2) / 3.0)};
}

Circle3 circle_through(const Vec3& p0, const Vec3& p1, const Vec3& p2, double eps_rel) {
  if (collinear(p0, p1, p2, eps_rel)) throw GeometryError(ErrorCode::CollinearPoints);
  const Vec3 a = p0 - p2;
  const Vec3 b = p1 - p2;
  const Vec3 axb = cross(a, b);
  const Vec3 offset = cross(b * norm2(a) - a * norm2(b), axb) / (2.0 * norm2(axb));
  const Vec3 center = p2 + offset;
  const double radius =
      (distance(center, p0) + distance(center, p1) + distance(center, p2)) / 3.0;
  return {center, radius, normalized(cross(p1 - p0, p2 - p0))};
}

Sphere circumsphere4(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3,
                     double eps_rel) {
  if (coplanar(p0, p1, p2, p3, eps_rel)) throw GeometryError(ErrorCode::CoplanarPoints);
  // Perpendicular-bisector planes of the chords from p0, solved by Cramer's rule.
  const Vec3 e1 = p1 - p0, e2 = p2 - p0, e3 = p3 - p0;
  const double det = triple(e1, e2, e3);
  const Vec3 u = (cross(e2, e3) * norm2(e1) + cross(e3, e1) * norm2(e2) +
                  cross(e1, e2) * norm2(e3)) /
                 (2.0 * det);
  const Vec3 center = p0 + u;
  const double radius = (distance(center, p0) + distance(center, p1) +
                         distance(center, p2) + distance(center, p3)) /
                        4.0;
  return {center, radius};
}

std::vector<Vec3> line_sphere_intersection(const Line3& l, const Sphere& s, double eps_rel) {
  const Vec3 foot = l.closest_point(s.center);
  const double h = distance(foot, s.center);
  const double r = s.radius;
  if (std::abs(h - r) <= eps_rel * r) return {foot};
  if (h > r) return {};
  const double half = std::sqrt((r - h) * (r + h));
  return {foot - l.direction * half, foot + l.direction * half};
}

Line3 plane_plane_intersection(const Plane& p1, const Plane& p2, double eps_rel) {
  const Vec3 dir = cross(p1.normal, p2.normal);
  const double len2 = norm2(dir);
  if (!(std::sqrt(len2) > eps_rel)) throw GeometryError(ErrorCode::ParallelPlanes);
  const Vec3 point = (cross(p2.normal, dir) * p1.offset + cross(dir, p1.normal) * p2.offset) / len2;
  return {point, dir / std::sqrt(len2)};
}

Vec3 best_fit_normal(const std::vector<Vec3>& pts) {
  Vec3 mean;
  for (const auto& p : pts) mean += p;
  mean = mean / static_cast<double>(pts.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : pts) {
    const Eigen::Vector3d d(p.x - mean.x, p.y - mean.y, p.z - mean.z);
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
  const Eigen::Vector3d n = solver.eigenvectors().col(0);  // smallest eigenvalue
  return normalized({n(0), n(1), n(2)});
}

}  // namespace isotet
