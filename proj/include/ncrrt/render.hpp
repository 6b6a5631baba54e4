// SVG rendering of a planning run.

#pragma once

#include <string>

#include "ncrrt/planners.hpp"
#include "ncrrt/space.hpp"

namespace ncrrt {

struct RenderSpec {
    /// Canvas width in pixels; the height follows the bounds' aspect ratio.
    double width_px{600.0};
    double edge_stroke{1.0};
    double path_stroke{3.0};
    double endpoint_radius{6.0};
    std::string free_color{"#ffffff"};
    std::string obstacle_color{"#000000"};
    std::string edge_color{"#7f7f7f"};
    std::string start_color{"#1f77b4"};
    std::string goal_color{"#ff7f0e"};
    std::string path_color{"#d62728"};
};

/// Standalone SVG: background, obstacle rects, one <line> per tree edge, the
/// success path as a single <polyline>, then start and goal circles.
[[nodiscard]] std::string render_svg(const PlanOutcome& outcome, const Scenario& s,
                                     const RenderSpec& spec = {});

}  // namespace ncrrt
