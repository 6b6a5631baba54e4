#include "ncrrt/render.hpp"

#include <algorithm>
#include <sstream>

#include "ncrrt/io.hpp"

namespace ncrrt {

namespace {

class Viewport {
public:
    Viewport(const WorldBounds& b, double width_px)
        : bounds_(b), scale_(width_px / b.width()), width_(width_px), height_(b.height() * scale_) {}

    [[nodiscard]] double px(double x) const { return (x - bounds_.x_min) * scale_; }
    // World y points up, screen y points down.
    [[nodiscard]] double py(double y) const { return (bounds_.y_max - y) * scale_; }
    [[nodiscard]] double scale() const { return scale_; }
    [[nodiscard]] double width() const { return width_; }
    [[nodiscard]] double height() const { return height_; }

private:
    WorldBounds bounds_;
    double scale_;
    double width_;
    double height_;
};

std::string num(double v) { return io::format_real(v); }

}  // namespace

std::string render_svg(const PlanOutcome& outcome, const Scenario& s, const RenderSpec& spec) {
    const Viewport vp(s.bounds, spec.width_px);
    std::ostringstream svg;
    svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << num(vp.width()) << R"(" height=")"
        << num(vp.height()) << R"(" viewBox="0 0 )" << num(vp.width()) << ' ' << num(vp.height())
        << "\">\n";
    svg << R"(  <rect class="free" x="0" y="0" width=")" << num(vp.width()) << R"(" height=")"
        << num(vp.height()) << R"(" fill=")" << spec.free_color << "\"/>\n";

    for (const auto& o : s.obstacles) {
        // Clip to the visible world.
        const double x0 = std::max(o.x_min, s.bounds.x_min);
        const double x1 = std::min(o.x_max, s.bounds.x_max);
        const double y0 = std::max(o.y_min, s.bounds.y_min);
        const double y1 = std::min(o.y_max, s.bounds.y_max);
        svg << R"(  <rect class="obstacle" x=")" << num(vp.px(x0)) << R"(" y=")" << num(vp.py(y1))
            << R"(" width=")" << num((x1 - x0) * vp.scale()) << R"(" height=")"
            << num((y1 - y0) * vp.scale()) << R"(" fill=")" << spec.obstacle_color << "\"/>\n";
    }

    svg << R"(  <g class="tree" stroke=")" << spec.edge_color << R"(" stroke-width=")"
        << num(spec.edge_stroke) << "\">\n";
    for (const auto& n : outcome.tree.nodes()) {
        if (!n.parent) {
            continue;
        }
        const Config& p = outcome.tree.config(*n.parent);
        svg << R"(    <line x1=")" << num(vp.px(p.x)) << R"(" y1=")" << num(vp.py(p.y)) << R"(" x2=")"
            << num(vp.px(n.config.x)) << R"(" y2=")" << num(vp.py(n.config.y)) << "\"/>\n";
    }
    svg << "  </g>\n";

    if (outcome.path) {
        svg << R"(  <polyline class="path" fill="none" stroke=")" << spec.path_color
            << R"(" stroke-width=")" << num(spec.path_stroke) << R"(" points=")";
        bool first = true;
        for (const auto& c : *outcome.path) {
            svg << (first ? "" : " ") << num(vp.px(c.x)) << ',' << num(vp.py(c.y));
            first = false;
        }
        svg << "\"/>\n";
    }

    svg << R"(  <circle class="start" cx=")" << num(vp.px(s.start.x)) << R"(" cy=")"
        << num(vp.py(s.start.y)) << R"(" r=")" << num(spec.endpoint_radius) << R"(" fill=")"
        << spec.start_color << "\"/>\n";
    svg << R"(  <circle class="goal" cx=")" << num(vp.px(s.goal.x)) << R"(" cy=")"
        << num(vp.py(s.goal.y)) << R"(" r=")" << num(spec.endpoint_radius) << R"(" fill=")"
        << spec.goal_color << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ncrrt
