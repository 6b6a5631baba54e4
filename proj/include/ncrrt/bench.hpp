// Multi-trial benchmark campaigns and their statistics.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncrrt/planners.hpp"
#include "ncrrt/space.hpp"

namespace ncrrt {

struct TrialRecord {
    std::string scenario_name;
    PlannerKind planner{PlannerKind::Basic};
    std::uint64_t seed{0};
    bool success{false};
    int iterations{0};
    std::optional<double> path_length;
    double wall_time{0.0};
};

struct Histogram {
    std::vector<double> bin_edges;
    std::vector<std::size_t> counts;
};

struct SummaryStats {
    std::optional<double> mean_length;
    std::optional<double> std_length;
    double short_fraction{0.0};
    double mean_wall_time{0.0};
    int success_count{0};
    int trial_count{0};
};

/// Trial seed: mix64(mix64(base_seed ^ tag(kind)) + trial_index), where
/// tag(kind) is a fixed per-planner constant (basic 0x62617369630000A1,
/// goalbias 0x676F616C626961A2, goalzoom 0x676F616C7A6F6FA3, ncrrt
/// 0x6E6372727400A4A4). A planner's seeds depend only on its own tag, so adding
/// planners to a campaign leaves the others unchanged.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t base_seed, PlannerKind kind,
                                       std::uint64_t trial_index) noexcept;

struct CampaignOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned workers{1};
};

/// Runs `trials` independent plans per planner. Records are ordered by
/// (position in `kinds`, trial index) whatever the execution schedule.
[[nodiscard]] std::vector<TrialRecord> run_campaign(const Scenario& s,
                                                    std::span<const PlannerKind> kinds,
                                                    const PlannerParams& params, int trials,
                                                    std::uint64_t base_seed,
                                                    CampaignOptions options = {});

/// Equal-width bins over [min, max]; the last bin is closed on the right.
/// Constant input widens the range to [v - 0.5, v + 0.5].
[[nodiscard]] Histogram make_histogram(std::span<const double> lengths, int bins);

/// Per planner: successful trials with length <= threshold over all trials.
[[nodiscard]] std::map<PlannerKind, double> classify_short(std::span<const TrialRecord> records,
                                                           double threshold);

/// Per planner: mean and population std of successful lengths, mean wall time
/// over all trials, short fraction and success count.
[[nodiscard]] std::map<PlannerKind, SummaryStats> summarize(std::span<const TrialRecord> records,
                                                            double threshold);

}  // namespace ncrrt
