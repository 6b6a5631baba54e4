#include "ncrrt/samplers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace ncrrt {

void validate(const SamplerParams& params) {
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw ValidationError("p must lie in [0, 1]");
    }
    if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) {
        throw ValidationError("lambda must be positive");
    }
    if (!(params.sigma > 0.0 && params.sigma <= 100.0)) {
        throw ValidationError("sigma must lie in (0, 100]");
    }
    if (params.cluster_size < 1) {
        throw ValidationError("cluster size must be at least 1");
    }
    if (params.max_attempts < 1) {
        throw ValidationError("max attempts must be at least 1");
    }
}

namespace {

struct Direction {
    double cos;
    double sin;
};

// Kernels on |x| <= pi/4 (fdlibm minimax coefficients).
constexpr double sin_kernel(double x) noexcept {
    const double z = x * x;
    const double r = -1.66666666666666324348e-01 +
                     z * (8.33333333332248946124e-03 +
                          z * (-1.98412698298579493134e-04 +
                               z * (2.75573137070700676789e-06 +
                                    z * (-2.50507602534068634195e-08 + z * 1.58969099521155010221e-10))));
    return x + x * z * r;
}

constexpr double cos_kernel(double x) noexcept {
    const double z = x * x;
    const double r = 4.16666666666666019037e-02 +
                     z * (-1.38888888888741095749e-03 +
                          z * (2.48015872894767294178e-05 +
                               z * (-2.75573143513906633035e-07 +
                                    z * (2.08757232129817482790e-09 + z * -1.13596475577881948265e-11))));
    return 1.0 - 0.5 * z + z * z * r;
}

// Per octant, (cos, sin) = (a*kc + b*ks, c*kc + d*ks) for the kernel values
// kc, ks. Odd octants measure the angle back from the next quarter turn,
// which swaps the kernels.
constexpr std::array<std::array<double, 4>, 8> kOctant{{
    {1.0, 0.0, 0.0, 1.0},
    {0.0, 1.0, 1.0, 0.0},
    {0.0, -1.0, 1.0, 0.0},
    {-1.0, 0.0, 0.0, 1.0},
    {-1.0, 0.0, 0.0, -1.0},
    {0.0, -1.0, -1.0, 0.0},
    {0.0, 1.0, -1.0, 0.0},
    {1.0, 0.0, 0.0, -1.0},
}};

// (cos, sin) of 2*pi*v for v in [0, 1), using only basic arithmetic so the
// result is the same on every platform. Accurate to about 1 ulp.
constexpr Direction octant_direction(double v) noexcept {
    const double w = 8.0 * v;
    const int octant = static_cast<int>(w);
    const double f = w - octant;  // exact (Sterbenz)
    const double odd = static_cast<double>(octant & 1);
    // f or 1 - f, both exact
    const double x = (odd + f * (1.0 - 2.0 * odd)) * (std::numbers::pi / 4.0);
    const double kc = cos_kernel(x);
    const double ks = sin_kernel(x);
    const auto& m = kOctant[static_cast<std::size_t>(octant)];
    return {m[0] * kc + m[1] * ks, m[2] * kc + m[3] * ks};
}

constexpr int kTableBits = 8;
constexpr int kTableSize = 1 << kTableBits;

constexpr std::array<Direction, kTableSize> kDirections = [] {
    std::array<Direction, kTableSize> table{};
    for (int i = 0; i < kTableSize; ++i) {
        table[static_cast<std::size_t>(i)] = octant_direction(static_cast<double>(i) / kTableSize);
    }
    return table;
}();

// Same as octant_direction to within a few ulp, but cheaper: a table entry
// rotated by the remaining angle b < 2*pi/256, whose dropped Taylor terms
// fall below 1e-17. This is the hot path of the narrowness test.
Direction unit_direction(double v) noexcept {
    const double w = v * kTableSize;
    const int i = static_cast<int>(w);
    const double b = (w - i) * (2.0 * std::numbers::pi / kTableSize);
    const double b2 = b * b;
    const double cos_b = 1.0 - b2 * (0.5 - b2 * (1.0 / 24.0 - b2 * (1.0 / 720.0)));
    const double sin_b = b * (1.0 - b2 * (1.0 / 6.0 - b2 * (1.0 / 120.0 - b2 * (1.0 / 5040.0))));
    const Direction& e = kDirections[static_cast<std::size_t>(i)];
    return {e.cos * cos_b - e.sin * sin_b, e.sin * cos_b + e.cos * sin_b};
}

// Radius from u and angle from v, both uniform in [0, 1).
Config disk_point(const Config& center, double radius, double u, double v) noexcept {
    const double r = radius * std::sqrt(u);
    const Direction d = unit_direction(v);
    return {center.x + r * d.cos, center.y + r * d.sin};
}

double squared_distance_to(const Obstacle& o, const Config& c) noexcept {
    const double dx = std::max(std::max(o.x_min - c.x, c.x - o.x_max), 0.0);
    const double dy = std::max(std::max(o.y_min - c.y, c.y - o.y_max), 0.0);
    return dx * dx + dy * dy;
}

// Everything a cluster centred at c can touch: the bounds plus the obstacles
// within reach. Gives the same answers as collision_check for points in the
// disk.
class LocalObstacles {
public:
    LocalObstacles(const Config& c, const Scenario& s, double reach) : scenario_(s) {
        const auto& b = s.bounds;
        bounds_in_reach_ = !(c.x - reach >= b.x_min && c.x + reach <= b.x_max && c.y - reach >= b.y_min &&
                             c.y + reach <= b.y_max);
        add(b.x_min, b.y_min, b.x_max, b.y_max);
        const double to_bounds =
            std::min(std::min(c.x - b.x_min, b.x_max - c.x), std::min(c.y - b.y_min, b.y_max - c.y));
        double nearest_sq = reach * reach;
        for (const auto& o : s.obstacles) {
            const double d_sq = squared_distance_to(o, c);
            if (d_sq <= reach * reach) {
                add(o.x_min, o.y_min, o.x_max, o.y_max);
                nearest_sq = std::min(nearest_sq, d_sq);
            }
        }
        clearance_ = std::min(to_bounds, std::sqrt(nearest_sq));
    }

    /// Lower bound on the distance from the centre to anything that collides.
    [[nodiscard]] double clearance() const noexcept { return clearance_; }

    /// True when no cluster point can collide.
    [[nodiscard]] bool empty() const noexcept { return !bounds_in_reach_ && count_ == 1 && !overflow_; }

    [[nodiscard]] bool collides(const Config& q) const noexcept {
        if (overflow_) {
            return collision_check(q, scenario_);
        }
        // Slot 0 holds the bounds, where being outside collides; the rest are
        // obstacles, where being inside does.
        bool hit = !contains(0, q);
        for (std::size_t i = 1; i < count_; ++i) {
            hit |= contains(i, q);
        }
        return hit;
    }

private:
    static constexpr std::size_t kCapacity = 32;

    void add(double x0, double y0, double x1, double y1) noexcept {
        if (count_ == kCapacity) {
            overflow_ = true;
            return;
        }
        x_min_[count_] = x0;
        y_min_[count_] = y0;
        x_max_[count_] = x1;
        y_max_[count_] = y1;
        ++count_;
    }

    [[nodiscard]] bool contains(std::size_t i, const Config& q) const noexcept {
        return (q.x >= x_min_[i]) & (q.x <= x_max_[i]) & (q.y >= y_min_[i]) & (q.y <= y_max_[i]);
    }

    const Scenario& scenario_;
    std::array<double, kCapacity> x_min_;
    std::array<double, kCapacity> y_min_;
    std::array<double, kCapacity> x_max_;
    std::array<double, kCapacity> y_max_;
    double clearance_{0.0};
    std::size_t count_{0};
    bool bounds_in_reach_{true};
    bool overflow_{false};
};

void skip_disk_draws(RngStream& rng, int count) noexcept { rng.discard(2 * static_cast<std::uint64_t>(count)); }

}  // namespace

Config random_state(const Scenario& s, RngStream& rng, int max_rejections) {
    const auto& b = s.bounds;
    for (int rejected = 0; rejected < max_rejections; ++rejected) {
        const double x = b.x_min + rng.uniform() * b.width();
        const double y = b.y_min + rng.uniform() * b.height();
        const Config c{x, y};
        if (!collision_check(c, s)) {
            return c;
        }
    }
    throw SamplingExhausted("random_state: " + std::to_string(max_rejections) +
                            " consecutive samples collided in scenario '" + s.name + "'");
}

Config sample_disk(const Config& center, double radius, RngStream& rng) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    return disk_point(center, radius, u, v);
}

Config goal_bias_state(const Scenario& s, RngStream& rng, double p, int max_rejections) {
    if (rng.uniform() < p) {
        return random_state(s, rng, max_rejections);
    }
    return s.goal;
}

Config goal_zoom_state(const Scenario& s, const Tree& t, RngStream& rng, const SamplerParams& params) {
    const int max_rejections = 10 * params.max_attempts;
    if (rng.uniform() < params.p) {
        return random_state(s, rng, max_rejections);
    }
    const double radius = metric(t.config(nearest_neighbour(s.goal, t)), s.goal);
    if (radius == 0.0) {
        return s.goal;
    }
    for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
        const Config c = sample_disk(s.goal, radius, rng);
        if (!collision_check(c, s)) {
            return c;
        }
    }
    return random_state(s, rng, max_rejections);
}

bool is_narrow(const Config& c, const Scenario& s, RngStream& rng, double lambda, double sigma,
               int cluster_size) {
    // Disk draws may land a rounding error past their nominal radius.
    const double reach = lambda * (1.0 + 1e-9) + 1e-9 * (1.0 + std::abs(c.x) + std::abs(c.y));
    const LocalObstacles local(c, s, reach);
    if (local.empty()) {
        // Nothing can collide and sigma > 0, so the test fails.
        skip_disk_draws(rng, cluster_size);
        return false;
    }

    // count * 100 >= sigma * N, i.e. (count / N) * 100 >= sigma without the division.
    const double needed = sigma * static_cast<double>(cluster_size) / 100.0;

    // Draw i uses the stream's outputs 2i (radius) and 2i + 1 (angle). Only the
    // count matters, so draws are read in place and the stream is advanced
    // past all of them at the end. Draws whose radius stays inside the
    // clearance cannot collide and are never built.
    const double free_radius = local.clearance() - 1e-9 * (1.0 + lambda + std::abs(c.x) + std::abs(c.y));
    const double free_u = free_radius > 0.0 ? (free_radius / lambda) * (free_radius / lambda) * (1.0 - 1e-12) : 0.0;

    // Draws not yet known to be free. With a wide clearance most radii fall
    // short of every obstacle, and counting them first can settle the test.
    int unresolved = cluster_size;
    const bool radii_counted = free_u > 0.5;
    if (radii_counted) {
        unresolved = 0;
        for (int i = 0; i < cluster_size; ++i) {
            unresolved += rng.peek_uniform(2 * static_cast<std::uint64_t>(i)) >= free_u ? 1 : 0;
        }
    }

    int colliding = 0;
    for (int i = 0; i < cluster_size && colliding < needed && colliding + unresolved >= needed; ++i) {
        const auto at = 2 * static_cast<std::uint64_t>(i);
        const double u = rng.peek_uniform(at);
        if (u < free_u) {
            unresolved -= radii_counted ? 0 : 1;
            continue;
        }
        colliding += local.collides(disk_point(c, lambda, u, rng.peek_uniform(at + 1))) ? 1 : 0;
        --unresolved;
    }
    skip_disk_draws(rng, cluster_size);
    return colliding >= needed;
}

Config narrow_state(const Scenario& s, RngStream& rng, const SamplerParams& params) {
    const int max_rejections = 10 * params.max_attempts;
    Config candidate = random_state(s, rng, max_rejections);
    for (int attempt = 1;; ++attempt) {
        if (is_narrow(candidate, s, rng, params.lambda, params.sigma, params.cluster_size)) {
            return candidate;
        }
        if (attempt >= params.max_attempts) {
            return candidate;
        }
        candidate = random_state(s, rng, max_rejections);
    }
}

}  // namespace ncrrt
