#pragma once

// Text formats shared by the CLI: tetrahedron files, coordinate lists and
// JSON reports.

#include <string>
#include <string_view>
#include <vector>

#include "isotet/harness.hpp"
#include "isotet/isogonal.hpp"

namespace isotet {

// {"params": [a, b, c]} (canonical embedding) or {"vertices": [[x,y,z] x 4]}.
// Throws BadInput on malformed input.
Tetrahedron parse_tetrahedron(std::string_view json_text);

// Three comma-separated numbers. Throws BadInput.
Vec3 parse_triple(std::string_view text);

std::string report_json(const VerificationReport& report);
std::string reports_json(const std::vector<VerificationReport>& reports);

// {"kind": "finite", "point": [...]}, {"kind": "infinite", "direction": [...]},
// {"kind": "vertex", "vertex": "A"} or {"kind": "edge", "edge": "AB"}.
std::string conjugate_json(const ConjugateResult& result);
// One human-readable line.
std::string conjugate_text(const ConjugateResult& result);

}  // namespace isotet
