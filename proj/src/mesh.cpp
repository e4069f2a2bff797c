#include "isotet/mesh.hpp"

#include <cstdio>
#include <vector>

#include "isotet/quadric.hpp"

namespace isotet {
namespace {

void append_vertex(std::string& out, const Vec3& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
  out += buf;
}

// Two triangles per cell of a res x res patch whose first vertex is `base`
// (0-based).
void append_patch_faces(std::string& out, int base, int res) {
  char buf[96];
  for (int i = 0; i + 1 < res; ++i)
    for (int j = 0; j + 1 < res; ++j) {
      const int k = base + i * res + j + 1;
      std::snprintf(buf, sizeof buf, "f %d %d %d\nf %d %d %d\n", k, k + res, k + res + 1, k,
                    k + res + 1, k + 1);
      out += buf;
    }
}

double grid(double extent, int i, int res) {
  return -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(res - 1);
}

}  // namespace

Surface parse_surface(std::string_view name) {
  if (name == "hpa") return Surface::HpA;
  if (name == "hpb") return Surface::HpB;
  if (name == "hpc") return Surface::HpC;
  if (name == "circumsphere") return Surface::Circumsphere;
  throw GeometryError(ErrorCode::BadSurfaceId, std::string(name));
}

std::string export_mesh(Surface surface, const IsoscelesParams& params, double extent, int res) {
  if (res < 2) throw GeometryError(ErrorCode::BadInput, "resolution must be >= 2");
  std::string verts, faces;

  if (surface == Surface::Circumsphere) {
    const double big_r = params.circumradius();
    for (int axis = 0; axis < 3; ++axis)
      for (double side : {-1.0, 1.0}) {
        for (int i = 0; i < res; ++i)
          for (int j = 0; j < res; ++j) {
            double c[3];
            c[axis] = side;
            // Swap the in-plane pair on one side so both caps wind outward.
            const double s = grid(1.0, i, res), t = grid(1.0, j, res);
            c[(axis + 1) % 3] = side > 0 ? s : t;
            c[(axis + 2) % 3] = side > 0 ? t : s;
            append_vertex(verts, normalized({c[0], c[1], c[2]}) * big_r);
          }
      }
    for (int patch = 0; patch < 6; ++patch) append_patch_faces(faces, patch * res * res, res);
    return verts + faces;
  }

  if (!(extent > 0.0)) throw GeometryError(ErrorCode::BadInput, "extent must be positive");
  const Axis axis = surface == Surface::HpA ? Axis::A : (surface == Surface::HpB ? Axis::B : Axis::C);
  const auto ax = AxisCoords::of(params, axis);
  const double k = ax.s / (ax.p * ax.q);
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      const double u = grid(extent, i, res), v = grid(extent, j, res);
      append_vertex(verts, ax.canonical(u, v, -k * u * v));
    }
  append_patch_faces(faces, 0, res);
  return verts + faces;
}

}  // namespace isotet
