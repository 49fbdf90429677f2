#pragma once

#include <string>

#include "arrangeops/arrangement.hpp"

namespace arrangeops {

// SVG 1.1 figure of a scattering diagram: one dashed root line, rank-many
// directed solid lines, labeled crossings, optionally the upper envelope
// highlighted.
std::string render_svg(const Arrangement& P, bool highlight_envelope);

} // namespace arrangeops
