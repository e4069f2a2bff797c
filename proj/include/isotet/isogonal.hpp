#pragma once

// Isogonal conjugation in an arbitrary tetrahedron.
//
// The conjugate of P is the circumcenter of the reflections of P in the four
// faceplanes. Halving that configuration about P gives the pedal sphere: the
// projections of P onto the faces lie on a sphere centered at the midpoint of
// P and its conjugate. The dihedral residual below checks the defining
// property independently, one edge at a time.

#include <array>
#include <variant>

#include "isotet/tetra.hpp"

namespace isotet {

// Distance thresholds, relative to the longest edge, below which a point
// counts as a vertex or as lying on an edgeline.
inline constexpr double kVertexSnapRel = 1e-7;
inline constexpr double kEdgeSnapRel = 1e-7;

struct FinitePoint {
  Vec3 point;
};
// P coincides with this vertex; every point of the opposite faceplane is a
// conjugate.
struct VertexDegenerate {
  Vertex vertex;
};
// P lies on this edgeline; every point of the opposite edgeline is a conjugate.
struct OnEdgeLine {
  Edge edge;
};

using ConjugateResult = std::variant<FinitePoint, AtInfinity, VertexDegenerate, OnEdgeLine>;

struct PedalSphere {
  Sphere sphere;
  // Projections onto the faces BCD, ACD, ABD, ABC.
  std::array<Vec3, 4> foot_points;
};

// Reflections of P in the faces opposite A, B, C, D.
std::array<Vec3, 4> face_reflections(const Tetrahedron& t, const Vec3& p);
// Projections of P onto the faces opposite A, B, C, D.
std::array<Vec3, 4> face_projections(const Tetrahedron& t, const Vec3& p);

ConjugateResult isogonal_conjugate(const Tetrahedron& t, const Vec3& p,
                                   double eps_rel = Tolerance::kDefaultEpsRel);

// Throws DegenerateProjections when the four feet are coplanar or repeated.
PedalSphere pedal_sphere(const Tetrahedron& t, const Vec3& p,
                         double eps_rel = Tolerance::kDefaultEpsRel);

// Angle in [0, pi/2] by which the planes through `edge` and P, Q fail to be
// mirror images in the dihedron's bisector plane. Throws PointOnEdgeLine.
double dihedral_isogonality_residual(const Tetrahedron& t, Edge edge, const Vec3& p,
                                     const Vec3& q);

// Largest dihedral residual over the edges whose line contains neither P
// nor Q. An edgeline through P (or Q) leaves the plane through it free, so
// such edges impose nothing; this also covers the vertex/opposite-faceplane
// and opposite-edgeline pairs.
double isogonality_residual(const Tetrahedron& t, const Vec3& p, const Vec3& q);

bool is_isogonal_pair(const Tetrahedron& t, const Vec3& p, const Vec3& q,
                      double angle_tol = 1e-8);

}  // namespace isotet
