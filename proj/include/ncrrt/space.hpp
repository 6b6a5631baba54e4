// Planar configuration space: points, rectangular obstacles, metric and
// collision predicates.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncrrt {

/// A point (x, y) in the planar configuration space.
struct Config {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Config&, const Config&) = default;
};

struct WorldBounds {
    double x_min{0.0};
    double y_min{0.0};
    double x_max{0.0};
    double y_max{0.0};

    [[nodiscard]] double width() const noexcept { return x_max - x_min; }
    [[nodiscard]] double height() const noexcept { return y_max - y_min; }
    [[nodiscard]] bool contains(const Config& c) const noexcept {
        return c.x >= x_min && c.x <= x_max && c.y >= y_min && c.y <= y_max;
    }
};

/// Closed axis-aligned rectangle. Degenerate (zero width or height) boxes are
/// allowed and act as line or point obstacles.
struct Obstacle {
    double x_min{0.0};
    double y_min{0.0};
    double x_max{0.0};
    double y_max{0.0};

    [[nodiscard]] bool contains(const Config& c) const noexcept {
        return c.x >= x_min && c.x <= x_max && c.y >= y_min && c.y <= y_max;
    }
};

/// Thrown when a scenario or parameter set violates its invariants.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Scenario {
    std::string name;
    WorldBounds bounds;
    std::vector<Obstacle> obstacles;
    Config start;
    Config goal;
    std::optional<double> short_path_threshold;
};

/// Throws ValidationError describing the first violated invariant.
void validate(const Scenario& s);

/// Euclidean distance.
[[nodiscard]] double metric(const Config& a, const Config& b) noexcept;

/// True when `c` is inside any obstacle (boundary included) or outside the
/// world bounds.
[[nodiscard]] bool collision_check(const Config& c, const Scenario& s) noexcept;

/// Fixed-step edge validation. Points are interpolated every `delta` units
/// from the lexicographically smaller endpoint, and the far endpoint is
/// always checked, so the result does not depend on argument order.
[[nodiscard]] bool segment_free(const Config& a, const Config& b, const Scenario& s, double delta);

}  // namespace ncrrt
