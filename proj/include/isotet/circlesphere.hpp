#pragma once

// Inversive geometry of spheres and planes, plus the planar triangle
// machinery (isogonal conjugates, arc-midpoint circles) it leans on.

#include <utility>
#include <variant>

#include "isotet/isogonal.hpp"

namespace isotet {

// Inversion with center `center` and power k: p -> center + k (p - c) / |p - c|^2.
// Negative k composes the inversion in radius sqrt(-k) with the point
// reflection through the center.
struct Inversion {
  Vec3 center;
  double power = 1.0;

  // Throws BadInput for zero power.
  static Inversion make(const Vec3& center, double power);
};

using SphereOrPlane = std::variant<Sphere, Plane>;

// Throws CenterInput.
Vec3 invert_point(const Inversion& inv, const Vec3& p);
SphereOrPlane invert_sphere(const Inversion& inv, const SphereOrPlane& s,
                            double eps_rel = Tolerance::kDefaultEpsRel);

// Angle between outward normals at a common point, in [0, pi]. A plane's
// "outward" side is opposite its normal, so a sphere against a plane gives
// cos = signed_distance(center) / radius. Throws Disjoint.
double sphere_angle(const SphereOrPlane& u, const SphereOrPlane& v,
                    double eps_rel = Tolerance::kDefaultEpsRel);
// Same convention for two coplanar circles.
double circle_angle(const Circle3& u, const Circle3& v,
                    double eps_rel = Tolerance::kDefaultEpsRel);

// Unsigned comparison: theta1 matches theta2 or its supplement. Normal
// orientation is a convention, so "equal angles" is read modulo that choice.
struct AngleMatch {
  double residual;     // min(|t1 - t2|, |t1 - (pi - t2)|)
  bool supplementary;  // the supplement branch matched
};
AngleMatch compare_angles(double theta1, double theta2);

// The two spheres through `sigma` centered where the axis of `sigma` meets
// `omega`; the first is centered on the same side as the circle. Throws
// NotOnSphere or GreatCircle.
std::pair<Sphere, Sphere> bisector_spheres(const Sphere& omega, const Circle3& sigma,
                                           double eps_rel = Tolerance::kDefaultEpsRel);

struct HomothetyCenters {
  std::variant<Vec3, AtInfinity> external;  // positive ratio
  Vec3 internal;                            // negative ratio
};
// Throws IdenticalSpheres.
HomothetyCenters homothety_centers(const Sphere& u, const Sphere& v,
                                   double eps_rel = Tolerance::kDefaultEpsRel);
// The sphere centered at the external homothety center through the circle
// u ∩ v. Throws Disjoint or EqualRadii.
Sphere homothety_bisector_sphere(const Sphere& u, const Sphere& v,
                                 double eps_rel = Tolerance::kDefaultEpsRel);
// The circle in which two spheres meet. Throws Disjoint.
Circle3 sphere_intersection_circle(const Sphere& u, const Sphere& v,
                                   double eps_rel = Tolerance::kDefaultEpsRel);

// Reflected cevians closer to parallel than this count as meeting at infinity.
inline constexpr double kParallelCevianRad = 1e-7;

using PlanarConjugate = std::variant<FinitePoint, AtInfinity, VertexDegenerate>;

// Isogonal conjugate of X in triangle ABC (X in the triangle's plane). A
// point of a sideline maps to the opposite vertex. Throws DegenerateTriangle
// or NotCoplanar.
PlanarConjugate planar_isogonal_conjugate(const Vec3& a, const Vec3& b, const Vec3& c,
                                          const Vec3& x,
                                          double eps_rel = Tolerance::kDefaultEpsRel);

struct ArcMidpointCircles {
  Circle3 gamma_m;  // centered at m, through A and B
  Circle3 gamma_n;  // centered at n, through A and B
  Vec3 m;           // midpoint of arc AB away from C
  Vec3 n;           // midpoint of arc AB through C
};
// Throws DegenerateTriangle.
ArcMidpointCircles arc_midpoint_circles(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace isotet
