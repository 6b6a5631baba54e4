#include "ncrrt/planners.hpp"

#include <chrono>
#include <cmath>

namespace ncrrt {

std::string_view to_string(PlannerKind kind) noexcept {
    switch (kind) {
        case PlannerKind::Basic: return "basic";
        case PlannerKind::GoalBias: return "goalbias";
        case PlannerKind::GoalZoom: return "goalzoom";
        case PlannerKind::NCRRT: return "ncrrt";
    }
    return "unknown";
}

std::optional<PlannerKind> parse_planner(std::string_view name) noexcept {
    for (const auto kind : kAllPlanners) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

void validate(const PlannerParams& params) {
    if (!(params.epsilon > 0.0) || !std::isfinite(params.epsilon)) {
        throw ValidationError("epsilon must be positive");
    }
    if (params.max_iterations < 1) {
        throw ValidationError("max iterations (K) must be at least 1");
    }
    if (!(params.delta > 0.0) || params.delta > params.epsilon) {
        throw ValidationError("delta must satisfy 0 < delta <= epsilon");
    }
    if (params.alpha < 1) {
        throw ValidationError("alpha must be at least 1");
    }
    validate(params.sampler);
}

Config new_state(const Config& x, const Config& x_near, double epsilon) noexcept {
    const double d = metric(x_near, x);
    if (d <= epsilon) {
        return x;
    }
    const double scale = epsilon / d;
    return {x_near.x + (x.x - x_near.x) * scale, x_near.y + (x.y - x_near.y) * scale};
}

ExtendResult extend(Tree& t, const Config& x, const PlannerParams& params, const Scenario& s) {
    const NodeId near = nearest_neighbour(x, t);
    const Config x_near = t.config(near);
    const Config x_new = new_state(x, x_near, params.epsilon);
    if (collision_check(x_new, s) || !segment_free(x_near, x_new, s, params.delta)) {
        return ExtendResult::Trapped;
    }
    t.add_node(x_new, near);
    return x_new == x ? ExtendResult::Reached : ExtendResult::Advanced;
}

namespace {

Config draw_sample(PlannerKind kind, int k, const Scenario& s, const Tree& t,
                   const PlannerParams& params, RngStream& rng) {
    const int max_rejections = 10 * params.sampler.max_attempts;
    switch (kind) {
        case PlannerKind::Basic:
            return random_state(s, rng, max_rejections);
        case PlannerKind::GoalBias:
            return goal_bias_state(s, rng, params.sampler.p, max_rejections);
        case PlannerKind::GoalZoom:
            return goal_zoom_state(s, t, rng, params.sampler);
        case PlannerKind::NCRRT:
            if (k % params.alpha == 0) {
                return narrow_state(s, rng, params.sampler);
            }
            return random_state(s, rng, max_rejections);
    }
    return random_state(s, rng, max_rejections);
}

}  // namespace

PlanOutcome plan(PlannerKind kind, const Scenario& s, const PlannerParams& params, RngStream& rng) {
    validate(s);
    validate(params);

    const auto started = std::chrono::steady_clock::now();
    PlanOutcome out{false, tree_init(s.start), std::nullopt, std::nullopt, 0, 0.0};
    for (int k = 1; k <= params.max_iterations; ++k) {
        const Config x_rand = draw_sample(kind, k, s, out.tree, params, rng);
        extend(out.tree, x_rand, params, s);

        const NodeId near_goal = nearest_neighbour(s.goal, out.tree);
        if (metric(out.tree.config(near_goal), s.goal) <= params.epsilon &&
            extend(out.tree, s.goal, params, s) == ExtendResult::Reached) {
            const NodeId goal_node{out.tree.size() - 1};
            out.success = true;
            out.path = extract_path(out.tree, goal_node);
            out.path_length = path_length(*out.path);
            out.iterations_used = k;
            break;
        }
    }
    if (!out.success) {
        out.iterations_used = params.max_iterations;
    }
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

}  // namespace ncrrt
