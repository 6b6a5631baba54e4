#include "ncrrt/space.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ncrrt {

namespace {

bool finite(const Config& c) noexcept { return std::isfinite(c.x) && std::isfinite(c.y); }

std::string fmt_point(const Config& c) {
    return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
}

bool lex_less(const Config& a, const Config& b) noexcept {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

}  // namespace

void validate(const Scenario& s) {
    const auto& b = s.bounds;
    if (!(std::isfinite(b.x_min) && std::isfinite(b.y_min) && std::isfinite(b.x_max) &&
          std::isfinite(b.y_max))) {
        throw ValidationError("scenario '" + s.name + "': bounds must be finite");
    }
    if (!(b.x_min < b.x_max) || !(b.y_min < b.y_max)) {
        throw ValidationError("scenario '" + s.name + "': bounds must satisfy x_min < x_max and y_min < y_max");
    }
    for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
        const auto& o = s.obstacles[i];
        const std::string where = "scenario '" + s.name + "': obstacle " + std::to_string(i);
        if (!(std::isfinite(o.x_min) && std::isfinite(o.y_min) && std::isfinite(o.x_max) &&
              std::isfinite(o.y_max))) {
            throw ValidationError(where + " has non-finite coordinates");
        }
        if (o.x_min > o.x_max || o.y_min > o.y_max) {
            throw ValidationError(where + " has min > max");
        }
        if (o.x_max < b.x_min || o.x_min > b.x_max || o.y_max < b.y_min || o.y_min > b.y_max) {
            throw ValidationError(where + " lies entirely outside the bounds");
        }
    }
    if (!finite(s.start) || !finite(s.goal)) {
        throw ValidationError("scenario '" + s.name + "': start and goal must be finite");
    }
    if (collision_check(s.start, s)) {
        throw ValidationError("scenario '" + s.name + "': start " + fmt_point(s.start) +
                              " is out of bounds or in collision");
    }
    if (collision_check(s.goal, s)) {
        throw ValidationError("scenario '" + s.name + "': goal " + fmt_point(s.goal) +
                              " is out of bounds or in collision");
    }
    if (s.short_path_threshold && !(*s.short_path_threshold > 0.0)) {
        throw ValidationError("scenario '" + s.name + "': short_path_threshold must be positive");
    }
}

double metric(const Config& a, const Config& b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool collision_check(const Config& c, const Scenario& s) noexcept {
    if (!s.bounds.contains(c)) {
        return true;
    }
    for (const auto& o : s.obstacles) {
        if (o.contains(c)) {
            return true;
        }
    }
    return false;
}

bool segment_free(const Config& a, const Config& b, const Scenario& s, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("segment_free: delta must be positive");
    }
    const auto& [from, to] = lex_less(b, a) ? std::pair{b, a} : std::pair{a, b};
    const double length = metric(from, to);
    if (length == 0.0) {
        return !collision_check(from, s);
    }
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const auto steps = static_cast<long long>(std::ceil(length / delta));
    // k = 0 .. steps-1 on the grid, then the exact far endpoint.
    for (long long k = 0; k < steps; ++k) {
        const double t = (static_cast<double>(k) * delta) / length;
        if (collision_check({from.x + t * dx, from.y + t * dy}, s)) {
            return false;
        }
    }
    return !collision_check(to, s);
}

}  // namespace ncrrt
