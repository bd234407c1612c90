#pragma once

#include <string>

#include "edlayout/layout.hpp"
#include "edlayout/scenario.hpp"

namespace edl {

/// Floor-plan SVG of a decoded layout. Service areas carry class="area",
/// auxiliary rooms class="block", vertical corridors class="corridor" and the
/// horizontal corridor bands class="hallway". Output depends only on the
/// arguments.
std::string render_svg(const DecodedLayout& layout, const Scenario& scenario, const std::string& title,
                       const ObjectiveVector& objectives);

}  // namespace edl
