#include <gtest/gtest.h>

#include <numbers>

#include "isotet/circlesphere.hpp"
#include "isotet/harness.hpp"
#include "oracles.hpp"

using namespace isotet;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
void expect_code(F&& f, ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Angle between two spheres at a sampled common point, from the outward
// normals there.
double angle_at_common_point(const Sphere& u, const Sphere& v) {
  const double d = distance(u.center, v.center);
  const Vec3 axis = (v.center - u.center) / d;
  const double along = (d * d + u.radius * u.radius - v.radius * v.radius) / (2 * d);
  const Vec3 x = u.center + axis * along + any_perpendicular(axis) *
                                                std::sqrt(u.radius * u.radius - along * along);
  const Vec3 n1 = normalized(x - u.center), n2 = normalized(x - v.center);
  return std::atan2(norm(cross(n1, n2)), dot(n1, n2));
}

}  // namespace

TEST(InvertPoint, Basics) {
  const Inversion inv = Inversion::make({0, 0, 0}, 1.0);
  EXPECT_NEAR(distance(invert_point(inv, {2, 0, 0}), {0.5, 0, 0}), 0.0, 1e-15);
  const Vec3 on = Vec3{1, 2, 2} / 3.0;
  EXPECT_NEAR(distance(invert_point(inv, on), on), 0.0, 1e-15);
  const Inversion inv2 = Inversion::make({1, -2, 0.5}, -3.0);
  const Vec3 p{0.3, 0.7, -1.1};
  EXPECT_NEAR(distance(invert_point(inv2, invert_point(inv2, p)), p), 0.0, 1e-14);
  expect_code([&] { invert_point(inv2, {1, -2, 0.5}); }, ErrorCode::CenterInput);
  expect_code([] { Inversion::make({0, 0, 0}, 0.0); }, ErrorCode::BadInput);
}

TEST(InvertSphere, ThroughCenterGivesPlane) {
  const Inversion inv = Inversion::make({0, 0, 0}, 1.0);
  const auto image = invert_sphere(inv, Sphere{{1, 0, 0}, 1.0});
  ASSERT_TRUE(std::holds_alternative<Plane>(image));
  const Plane pl = std::get<Plane>(image);
  // Oracle: three inverted sample points determine x = 1/2.
  for (const Vec3& s : {Vec3{2, 0, 0}, Vec3{1, 1, 0}, Vec3{1, 0, -1}})
    EXPECT_NEAR(pl.signed_distance(invert_point(inv, s)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(pl.normal.x), 1.0, 1e-15);

  const Plane through = Plane::from_equation(1, 2, -1, 0);
  const auto same = invert_sphere(inv, through);
  ASSERT_TRUE(std::holds_alternative<Plane>(same));
  EXPECT_NEAR(std::abs(dot(std::get<Plane>(same).normal, through.normal)), 1.0, 1e-15);
}

TEST(InvertSphere, PointwiseOracle) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    TrialRng rng(31, "invert-sphere", i);
    const Sphere s = Sphere::make(rng.in_box(2.0), rng.uniform(0.5, 2.0));
    const Vec3 o = rng.in_box(3.0);
    if (std::abs(s.radial_residual(o)) < 0.1) continue;
    const Inversion inv = Inversion::make(o, rng.sign() * rng.uniform(0.5, 3.0));
    const auto image = invert_sphere(inv, s);
    ASSERT_TRUE(std::holds_alternative<Sphere>(image));
    const Sphere img = std::get<Sphere>(image);
    for (int k = 0; k < 20; ++k) {
      const Vec3 x = s.center + rng.unit_vector() * s.radius;
      EXPECT_NEAR(img.radial_residual(invert_point(inv, x)), 0.0, 1e-9 * img.radius);
    }
    // A plane off the center maps to a sphere through the center.
    const Plane pl = Plane::from_normal_point(rng.unit_vector(), o + rng.unit_vector() * 0.7);
    if (std::abs(pl.signed_distance(o)) < 0.05) continue;
    const Sphere ps = std::get<Sphere>(invert_sphere(inv, pl));
    EXPECT_NEAR(ps.radial_residual(o), 0.0, 1e-12 * ps.radius);
    const Vec3 x = project_point_plane(o, pl) + any_perpendicular(pl.normal) * 1.3;
    EXPECT_NEAR(ps.radial_residual(invert_point(inv, x)), 0.0, 1e-9 * ps.radius);
  }
}

TEST(SphereAngle, Basics) {
  EXPECT_NEAR(sphere_angle(Sphere{{0, 0, 0}, 3}, Sphere{{5, 0, 0}, 4}), kPi / 2, 1e-15);
  EXPECT_NEAR(sphere_angle(Sphere{{0, 0, 0}, 2}, Sphere{{1, 0, 0}, 1}), 0.0, 1e-8);
  EXPECT_NEAR(sphere_angle(Sphere{{0, 0, 0}, 1}, Sphere{{3, 0, 0}, 2}), kPi, 1e-8);
  EXPECT_NEAR(sphere_angle(Sphere{{0, 0, 0}, 1}, Plane::from_equation(0, 0, 1, 0)), kPi / 2, 1e-15);
  expect_code([] { sphere_angle(Sphere{{0, 0, 0}, 1}, Sphere{{5, 0, 0}, 1}); }, ErrorCode::Disjoint);
}

TEST(SphereAngle, MatchesNormalsAtCommonPoint) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    TrialRng rng(32, "angle", i);
    const double r1 = rng.uniform(0.5, 2), r2 = rng.uniform(0.5, 2);
    const double d = rng.uniform(std::abs(r1 - r2) + 0.05, r1 + r2 - 0.05);
    const Sphere u{rng.in_box(2), r1};
    const Sphere v{u.center + rng.unit_vector() * d, r2};
    EXPECT_NEAR(sphere_angle(u, v), angle_at_common_point(u, v), 1e-12);
  }
}

TEST(InversionProperty, AnglesPreserved) {
  int checked = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    TrialRng rng(33, "preserve", i);
    const double r1 = rng.uniform(0.5, 2), r2 = rng.uniform(0.5, 2);
    const double d = rng.uniform(std::abs(r1 - r2) + 0.05, r1 + r2 - 0.05);
    const Sphere u{rng.in_box(2), r1};
    const Sphere v{u.center + rng.unit_vector() * d, r2};
    const Vec3 o = rng.in_box(4);
    if (std::abs(u.radial_residual(o)) < 0.1 || std::abs(v.radial_residual(o)) < 0.1) continue;
    ++checked;
    const Inversion inv = Inversion::make(o, rng.sign() * rng.uniform(0.5, 4));
    const double before = sphere_angle(u, v);
    const double after = sphere_angle(invert_sphere(inv, u), invert_sphere(inv, v));
    EXPECT_LE(compare_angles(before, after).residual, 1e-8);
    const bool flips = (u.radial_residual(o) < 0) != (v.radial_residual(o) < 0);
    EXPECT_NEAR(after, flips ? kPi - before : before, 1e-8);
  }
  EXPECT_GT(checked, 300);
}

TEST(BisectorSpheres, UnitExample) {
  const Sphere omega{{0, 0, 0}, 1};
  const Circle3 sigma = Circle3::make({0, 0, 0.5}, std::sqrt(3.0) / 2, {0, 0, 1});
  const auto [near, far] = bisector_spheres(omega, sigma);
  EXPECT_NEAR(distance(near.center, {0, 0, 1}), 0.0, 1e-15);
  EXPECT_NEAR(distance(far.center, {0, 0, -1}), 0.0, 1e-15);
  for (const Sphere& g : {near, far}) {
    EXPECT_NEAR(omega.radial_residual(g.center), 0.0, 1e-15);
    EXPECT_LE(compare_angles(sphere_angle(g, omega), sphere_angle(g, sigma.plane())).residual, 1e-9);
  }
  expect_code([&] { bisector_spheres(omega, Circle3::make({0, 0, 0}, 1, {0, 0, 1})); },
              ErrorCode::GreatCircle);
  expect_code([&] { bisector_spheres(omega, Circle3::make({0, 0, 0.5}, 0.5, {0, 0, 1})); },
              ErrorCode::NotOnSphere);
}

TEST(HomothetyCenters, Examples) {
  const auto hc = homothety_centers(Sphere{{0, 0, 0}, 1}, Sphere{{3, 0, 0}, 2});
  ASSERT_TRUE(std::holds_alternative<Vec3>(hc.external));
  const Vec3 ext = std::get<Vec3>(hc.external);
  EXPECT_NEAR(distance(ext, {-3, 0, 0}), 0.0, 1e-15);
  EXPECT_NEAR(distance(hc.internal, {1, 0, 0}), 0.0, 1e-15);
  // Oracle: ratio +2 about ext and -2 about internal carry u onto v.
  for (const Vec3& x : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0.6, 0.8}}) {
    EXPECT_NEAR(distance(ext + (x - ext) * 2.0, {3, 0, 0}), 2.0, 1e-14);
    EXPECT_NEAR(distance(hc.internal + (x - hc.internal) * -2.0, {3, 0, 0}), 2.0, 1e-14);
  }
  EXPECT_TRUE(std::holds_alternative<AtInfinity>(
      homothety_centers(Sphere{{0, 0, 0}, 1}, Sphere{{3, 0, 0}, 1}).external));
  const auto con = homothety_centers(Sphere{{1, 1, 1}, 1}, Sphere{{1, 1, 1}, 2});
  EXPECT_NEAR(distance(std::get<Vec3>(con.external), {1, 1, 1}), 0.0, 1e-15);
  EXPECT_NEAR(distance(con.internal, {1, 1, 1}), 0.0, 1e-15);
  expect_code([] { homothety_centers(Sphere{{0, 0, 0}, 1}, Sphere{{0, 0, 0}, 1}); },
              ErrorCode::IdenticalSpheres);
}

TEST(HomothetyBisector, Example) {
  const Sphere u{{0, 0, 0}, 1}, v{{1.2, 0, 0}, 1.5};
  const Sphere g = homothety_bisector_sphere(u, v);
  EXPECT_LE(compare_angles(sphere_angle(g, u), sphere_angle(g, v)).residual, 1e-9);
  expect_code([] { homothety_bisector_sphere(Sphere{{0, 0, 0}, 1}, Sphere{{1, 0, 0}, 1}); },
              ErrorCode::EqualRadii);
}

TEST(HomothetyBisector, RandomPairs) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    TrialRng rng(34, "hbs", i);
    const double r1 = rng.uniform(0.5, 2), r2 = rng.uniform(0.5, 2);
    if (std::abs(r1 - r2) < 0.05) continue;
    const double d = rng.uniform(std::abs(r1 - r2) + 0.05, r1 + r2 - 0.05);
    const Sphere u{rng.in_box(2), r1};
    const Sphere v{u.center + rng.unit_vector() * d, r2};
    const Sphere g = homothety_bisector_sphere(u, v);
    EXPECT_LE(compare_angles(sphere_angle(g, u), sphere_angle(g, v)).residual, 1e-8);
  }
}

TEST(PlanarConjugate, Examples) {
  const double h = std::sqrt(3.0);
  const Vec3 a{0, 0, 0}, b{2, 0, 0}, c{1, h, 0};
  const Vec3 g = (a + b + c) / 3.0;
  const auto r = planar_isogonal_conjugate(a, b, c, g);
  ASSERT_TRUE(std::holds_alternative<FinitePoint>(r));
  EXPECT_NEAR(distance(std::get<FinitePoint>(r).point, g), 0.0, 1e-15);

  // Circumcenter of (0,0), (4,0), (1,3) is (2,1). The orthocenter is where
  // the altitudes x = 1 and (x, y).(-3, 3) = 0 meet.
  const Vec3 p{0, 0, 0}, q{4, 0, 0}, s{1, 3, 0};
  const auto o = planar_isogonal_conjugate(p, q, s, {2, 1, 0});
  ASSERT_TRUE(std::holds_alternative<FinitePoint>(o));
  EXPECT_NEAR(distance(std::get<FinitePoint>(o).point, {1, 1, 0}), 0.0, 1e-14);

  const Circle3 circ = circle_through(p, q, s);
  const auto inf = planar_isogonal_conjugate(p, q, s, circ.center + Vec3{0, -1, 0} * circ.radius);
  EXPECT_TRUE(std::holds_alternative<AtInfinity>(inf));

  const auto side = planar_isogonal_conjugate(p, q, s, {1.5, 0, 0});
  ASSERT_TRUE(std::holds_alternative<FinitePoint>(side));
  EXPECT_NEAR(distance(std::get<FinitePoint>(side).point, s), 0.0, 1e-14);
  const auto vertex = planar_isogonal_conjugate(p, q, s, q);
  ASSERT_TRUE(std::holds_alternative<VertexDegenerate>(vertex));
  EXPECT_EQ(std::get<VertexDegenerate>(vertex).vertex, Vertex::B);

  expect_code([&] { planar_isogonal_conjugate(p, q, s, {1, 1, 1}); }, ErrorCode::NotCoplanar);
  expect_code([&] { planar_isogonal_conjugate(p, q, {8, 0, 0}, {1, 1, 0}); },
              ErrorCode::DegenerateTriangle);
}

TEST(PlanarConjugate, ReflectedCevianOracle) {
  // The conjugate lies on each cevian mirrored in the angle bisector.
  for (std::uint64_t i = 0; i < 300; ++i) {
    TrialRng rng(35, "planar", i);
    const RigidMotion m = random_rigid_motion(rng);
    std::array<Vec3, 3> v;
    for (auto& p : v) p = m.apply({rng.uniform(-2, 2), rng.uniform(-2, 2), 0});
    if (collinear(v[0], v[1], v[2], 0.05)) continue;
    const double w0 = rng.uniform(0.1, 1), w1 = rng.uniform(0.1, 1), w2 = rng.uniform(0.1, 1);
    const Vec3 x = (v[0] * w0 + v[1] * w1 + v[2] * w2) / (w0 + w1 + w2);
    const auto r = planar_isogonal_conjugate(v[0], v[1], v[2], x);
    ASSERT_TRUE(std::holds_alternative<FinitePoint>(r));
    const Vec3 y = std::get<FinitePoint>(r).point;
    for (std::size_t k = 0; k < 3; ++k) {
      const Vec3& apex = v[k];
      const Vec3 e1 = normalized(v[(k + 1) % 3] - apex), e2 = normalized(v[(k + 2) % 3] - apex);
      const Vec3 bis = normalized(e1 + e2);
      const Vec3 dx = normalized(x - apex);
      const Vec3 mirrored = bis * (2 * dot(dx, bis)) - dx;
      EXPECT_LE(norm(cross(mirrored, y - apex)), 1e-9 * distance(y, apex) + 1e-12);
    }
  }
}

TEST(ArcMidpointCircles, Equilateral) {
  const double h = std::sqrt(3.0);
  const Vec3 a{0, 0, 0}, b{2, 0, 0}, c{1, h, 0};
  const auto arcs = arc_midpoint_circles(a, b, c);
  const Vec3 o{1, h / 3, 0};
  EXPECT_NEAR(distance(midpoint(arcs.m, arcs.n), o), 0.0, 1e-14);
  EXPECT_NEAR(arcs.m.x, 1.0, 1e-14);
  EXPECT_NEAR(arcs.n.x, 1.0, 1e-14);
  EXPECT_LT(arcs.m.y, 0.0);
  EXPECT_NEAR(distance(arcs.m, a), arcs.gamma_m.radius, 1e-14);
  EXPECT_NEAR(distance(arcs.n, b), arcs.gamma_n.radius, 1e-14);
}

TEST(ArcMidpointCircles, IncenterAndEqualAngles) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    TrialRng rng(36, "arcs", i);
    const RigidMotion m = random_rigid_motion(rng);
    std::array<Vec3, 3> v;
    for (auto& p : v) p = m.apply({rng.uniform(-2, 2), rng.uniform(-2, 2), 0});
    if (collinear(v[0], v[1], v[2], 0.05)) continue;
    const auto& [a, b, c] = v;
    const auto arcs = arc_midpoint_circles(a, b, c);
    const double la = distance(b, c), lb = distance(c, a), lc = distance(a, b);
    const Vec3 in = (a * la + b * lb + c * lc) / (la + lb + lc);
    EXPECT_NEAR(distance(in, arcs.m), distance(a, arcs.m), 1e-9 * arcs.gamma_m.radius);

    const Vec3 x = (a * 0.3 + b * 0.5 + c * 0.2);
    const Vec3 y = std::get<FinitePoint>(planar_isogonal_conjugate(a, b, c, x)).point;
    const Circle3 abx = circle_through(a, b, x), aby = circle_through(a, b, y);
    for (const Circle3& g : {arcs.gamma_m, arcs.gamma_n})
      EXPECT_LE(compare_angles(circle_angle(g, abx), circle_angle(g, aby)).residual, 1e-8);
  }
}
