#pragma once

// Wavefront-style text meshes of the axis surfaces and the circumsphere.

#include <string>
#include <string_view>

#include "isotet/tetra.hpp"

namespace isotet {

enum class Surface { HpA, HpB, HpC, Circumsphere };

// "hpa", "hpb", "hpc" or "circumsphere". Throws BadSurfaceId.
Surface parse_surface(std::string_view name);

// Axis surfaces: res x res grid over the two in-plane canonical coordinates
// of the axis in [-extent, extent]^2, two triangles per cell.
// Circumsphere: a cube grid with res x res vertices per side pushed onto the
// sphere; `extent` is unused. Output is `v x y z` lines then 1-based
// `f i j k` lines. Throws BadInput unless extent > 0 and res >= 2.
std::string export_mesh(Surface surface, const IsoscelesParams& params, double extent, int res);

}  // namespace isotet
