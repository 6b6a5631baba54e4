// EXTEND primitive and the four RRT build loops.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ncrrt/rng.hpp"
#include "ncrrt/samplers.hpp"
#include "ncrrt/space.hpp"
#include "ncrrt/tree.hpp"

namespace ncrrt {

enum class PlannerKind : std::uint8_t { Basic, GoalBias, GoalZoom, NCRRT };

inline constexpr PlannerKind kAllPlanners[] = {PlannerKind::Basic, PlannerKind::GoalBias,
                                               PlannerKind::GoalZoom, PlannerKind::NCRRT};

/// CLI / file name: basic, goalbias, goalzoom, ncrrt.
[[nodiscard]] std::string_view to_string(PlannerKind kind) noexcept;
/// Inverse of to_string; nullopt for unknown names.
[[nodiscard]] std::optional<PlannerKind> parse_planner(std::string_view name) noexcept;

struct PlannerParams {
    double epsilon{20.0};
    int max_iterations{1500};
    /// Edge-check resolution.
    double delta{2.0};
    SamplerParams sampler{};
    /// NCRRT draws a narrow sample on iterations k with k mod alpha == 0.
    int alpha{3};
};

void validate(const PlannerParams& params);

enum class ExtendResult : std::uint8_t { Reached, Advanced, Trapped };

struct PlanOutcome {
    bool success{false};
    Tree tree;
    std::optional<std::vector<Config>> path;
    std::optional<double> path_length;
    int iterations_used{0};
    double wall_time{0.0};
};

/// Returns `x` when it is within `epsilon` of `x_near`, otherwise the point
/// exactly `epsilon` from `x_near` towards `x`.
[[nodiscard]] Config new_state(const Config& x, const Config& x_near, double epsilon) noexcept;

/// One step of tree growth towards `x`. The new node and the edge from its
/// parent must both be free; otherwise the tree is left untouched.
ExtendResult extend(Tree& t, const Config& x, const PlannerParams& params, const Scenario& s);

/// Grows a tree from s.start for at most params.max_iterations iterations.
/// Failure is reported through PlanOutcome::success with the partial tree.
[[nodiscard]] PlanOutcome plan(PlannerKind kind, const Scenario& s, const PlannerParams& params,
                               RngStream& rng);

}  // namespace ncrrt
