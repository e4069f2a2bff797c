#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isotet {

enum class ErrorCode {
  CollinearPoints,
  CoplanarPoints,
  ParallelPlanes,
  InvalidTolerance,
  ZeroParameter,
  NotIsosceles,
  DegenerateParams,
  DegenerateTetrahedron,
  DegenerateProjections,
  PointOnEdgeLine,
  CenterInput,
  Disjoint,
  NotOnSphere,
  GreatCircle,
  IdenticalSpheres,
  EqualRadii,
  NotCoplanar,
  DegenerateTriangle,
  NotOnSurface,
  DegenerateSection,
  VertexInput,
  NotThroughX,
  CoincidentCircles,
  UnknownSuite,
  BadSurfaceId,
  BadInput,
};

std::string_view to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(ErrorCode code, const std::string& detail = {})
      : std::runtime_error(std::string(to_string(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isotet
