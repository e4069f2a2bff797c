#pragma once

// Hyperbolic paraboloids of conjugate pairs symmetric in a bimedian, and the
// circle constructions on the circumsphere that go with them.
//
// Everything is stated in the canonical frame of an isosceles tetrahedron
// (vertices (-a,b,c), (a,-b,c), (a,b,-c), (-a,-b,-c)). Per axis, write the
// canonical coordinates as (u, v, w) with w along the bimedian and parameters
// (p, q, s) permuted to match:
//
//   axis C: (u, v, w) = (x, y, z), (p, q, s) = (a, b, c)
//   axis A: (u, v, w) = (y, z, x), (p, q, s) = (b, c, a)
//   axis B: (u, v, w) = (z, x, y), (p, q, s) = (c, a, b)
//
// The surface is then w = -(s / (p q)) u v.

#include <variant>

#include "isotet/tetra.hpp"

namespace isotet {

struct AxisCoords {
  std::array<std::size_t, 3> index;  // canonical coordinate index of u, v, w
  double p, q, s;

  static AxisCoords of(const IsoscelesParams& params, Axis axis);
  Vec3 local(const Vec3& canonical) const {
    return {canonical[index[0]], canonical[index[1]], canonical[index[2]]};
  }
  Vec3 canonical(double u, double v, double w) const;
};

struct HyperbolicParaboloid {
  CanonicalFrame frame;
  Axis axis;
  double coefficient;  // s / (p q)

  // World point of the surface over local coordinates (u, v).
  Vec3 point(double u, double v) const;
};

struct EllipseSection {
  double z0;
  double r1, r2;  // radii of the pedal-sphere circles on ACD and ABD
  double d1, d2;  // distances from (0, 0, z0) to ACD and ABC
  double theta;   // half the dihedral angle at CD
  double phi;     // tan(phi) = a / b
};

struct Tangent {};

HyperbolicParaboloid hpar(const CanonicalFrame& frame, Axis axis);
// Canonical-frame residual w + (s/(p q)) u v of a world point, in length units.
double hpar_residual(const HyperbolicParaboloid& h, const Vec3& p);

// Returns (p, mirror of p in the bimedian). Throws NotOnSurface when
// |residual| > eps_rel * R.
std::pair<Vec3, Vec3> conjugate_pair_on_hpar(const CanonicalFrame& frame, Axis axis,
                                             const Vec3& p,
                                             double eps_rel = Tolerance::kDefaultEpsRel);

// Section of the axis-C configuration by the plane z = z0 for a pedal sphere
// of radius `pedal_radius` centered at (0, 0, z0). Throws DegenerateSection
// when a face lies beyond the sphere.
EllipseSection section_ellipses(const IsoscelesParams& params, double z0, double pedal_radius);
// Residuals of the two section ellipses at canonical (x, y): zero when the
// point lies on both.
std::pair<double, double> section_ellipse_residuals(const EllipseSection& e, double x, double y);

// (M'P_B^2 - M'P_C^2) / 4 from the projections of canonical p onto ACD and
// ABD, with M' its foot on the z-axis.
double pedal_distance_identity(const IsoscelesParams& params, const Vec3& p);
// x y / (a b) + z / c. Same sign and zero set as the geometric value, which
// equals this divided by pedal_distance_factor.
double pedal_distance_closed_form(const IsoscelesParams& params, const Vec3& p);
// 1/a^2 + 1/b^2 + 1/c^2.
double pedal_distance_factor(const IsoscelesParams& params);

// |PR - RQ| for the projections P, Q of X onto the two faces through the edge
// D-axis, and R its foot on the bimedian of that axis.
double equidistant_projection_residual(const Tetrahedron& t, Axis axis, const Vec3& x);

// det of [(q w, q s, u), (-p s, -p w, v), (-q u, p v, w)] at canonical p on
// the circumsphere. Throws NotOnSphere.
double tangency_det(const IsoscelesParams& params, const Vec3& p, Axis axis = Axis::C,
                    double eps_rel = Tolerance::kDefaultEpsRel);
// -(p^2 + q^2)(p q w + u v s).
double tangency_det_factored(const IsoscelesParams& params, const Vec3& p, Axis axis = Axis::C);

// Whether the circles through X and each edge of the axis's edge pair
// (C: AB/CD, A: DA/BC, B: DB/AC) touch at X, from their tangent lines.
// Throws VertexInput.
bool circles_touch(const Tetrahedron& t, const Vec3& x, Axis axis, double angle_tol = 1e-8);
// Sine of the angle between the two tangent lines at X.
double circles_tangent_sine(const Tetrahedron& t, const Vec3& x, Axis axis);

// Second common point of two circles on `omega` that both pass through x.
// Throws NotOnSphere, NotThroughX or CoincidentCircles.
std::variant<Vec3, Tangent> second_circle_intersection(const Sphere& omega, const Circle3& c1,
                                                       const Circle3& c2, const Vec3& x,
                                                       double eps_rel = Tolerance::kDefaultEpsRel);

// Conjugate of x on the circumsphere by reflecting, in the axis bimedian,
// the second intersection of the circles through x and the axis's edge pair.
// Throws VertexInput.
Vec3 bogdanov_conjugate(const Tetrahedron& t, const Vec3& x, Axis axis,
                        double eps_rel = Tolerance::kDefaultEpsRel);

// Canonical point of circumsphere ∩ surface. `t` in [-1, 1] sets u = t R;
// `upper` picks the sign of v.
Vec3 sphere_hpar_point(const IsoscelesParams& params, Axis axis, double t, bool upper);

}  // namespace isotet
