#pragma once

#include <string>

#include "iet/suspension.hpp"

namespace iet::cli {

/// SVG 1.1 drawing of both chains. Heights are negated on output so that the
/// picture has positive heights pointing up; the viewBox is the chains'
/// bounding box grown by 5% on each side. A witness, if any, is marked.
std::string render_svg(const SuspensionDiagram& diagram, const IntersectionReport& report);

}  // namespace iet::cli
