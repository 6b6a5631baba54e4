#include "ncrrt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ncrrt {

namespace {

constexpr std::uint64_t planner_tag(PlannerKind kind) noexcept {
    switch (kind) {
        case PlannerKind::Basic: return 0x62617369630000A1ULL;
        case PlannerKind::GoalBias: return 0x676F616C626961A2ULL;
        case PlannerKind::GoalZoom: return 0x676F616C7A6F6FA3ULL;
        case PlannerKind::NCRRT: return 0x6E6372727400A4A4ULL;
    }
    return 0;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, PlannerKind kind, std::uint64_t trial_index) noexcept {
    return mix64(mix64(base_seed ^ planner_tag(kind)) + trial_index);
}

std::vector<TrialRecord> run_campaign(const Scenario& s, std::span<const PlannerKind> kinds,
                                      const PlannerParams& params, int trials,
                                      std::uint64_t base_seed, CampaignOptions options) {
    validate(s);
    validate(params);
    if (trials < 0) {
        throw ValidationError("trials must be non-negative");
    }

    const std::size_t per_kind = static_cast<std::size_t>(trials);
    std::vector<TrialRecord> records(kinds.size() * per_kind);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        for (std::size_t i = 0; i < per_kind; ++i) {
            auto& r = records[k * per_kind + i];
            r.scenario_name = s.name;
            r.planner = kinds[k];
            r.seed = trial_seed(base_seed, kinds[k], i);
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        // Trials run interleaved across planners so machine load drift hits every planner alike.
        for (std::size_t slot = next++; slot < records.size(); slot = next++) {
            auto& r = records[(slot % kinds.size()) * per_kind + slot / kinds.size()];
            try {
                RngStream rng(r.seed);
                const PlanOutcome out = plan(r.planner, s, params, rng);
                r.success = out.success;
                r.iterations = out.iterations_used;
                r.path_length = out.path_length;
                r.wall_time = out.wall_time;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
    workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(std::max<std::size_t>(records.size(), 1)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

Histogram make_histogram(std::span<const double> lengths, int bins) {
    if (lengths.empty()) {
        throw std::invalid_argument("make_histogram: no lengths to bin");
    }
    if (bins < 1) {
        throw std::invalid_argument("make_histogram: bins must be at least 1");
    }
    auto [min_it, max_it] = std::minmax_element(lengths.begin(), lengths.end());
    double lo = *min_it;
    double hi = *max_it;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / bins;

    Histogram h;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) {
        h.bin_edges[static_cast<std::size_t>(i)] = lo + width * i;
    }
    h.bin_edges.back() = hi;
    h.counts.assign(static_cast<std::size_t>(bins), 0);

    for (const double v : lengths) {
        // Arithmetic guess, then corrected against the stored edges so every
        // value lands in the bin whose [lo, hi) actually contains it.
        auto idx = static_cast<std::ptrdiff_t>(std::floor((v - lo) / width));
        idx = std::clamp<std::ptrdiff_t>(idx, 0, bins - 1);
        while (idx > 0 && v < h.bin_edges[static_cast<std::size_t>(idx)]) {
            --idx;
        }
        while (idx < bins - 1 && v >= h.bin_edges[static_cast<std::size_t>(idx) + 1]) {
            ++idx;
        }
        ++h.counts[static_cast<std::size_t>(idx)];
    }
    return h;
}

std::map<PlannerKind, double> classify_short(std::span<const TrialRecord> records, double threshold) {
    std::map<PlannerKind, std::pair<int, int>> tally;  // short, total
    for (const auto& r : records) {
        auto& [short_count, total] = tally[r.planner];
        ++total;
        if (r.success && r.path_length && *r.path_length <= threshold) {
            ++short_count;
        }
    }
    std::map<PlannerKind, double> out;
    for (const auto& [kind, t] : tally) {
        out[kind] = t.second == 0 ? 0.0 : static_cast<double>(t.first) / t.second;
    }
    return out;
}

std::map<PlannerKind, SummaryStats> summarize(std::span<const TrialRecord> records, double threshold) {
    std::map<PlannerKind, std::vector<const TrialRecord*>> by_kind;
    for (const auto& r : records) {
        by_kind[r.planner].push_back(&r);
    }
    const auto fractions = classify_short(records, threshold);

    std::map<PlannerKind, SummaryStats> out;
    for (const auto& [kind, rs] : by_kind) {
        SummaryStats st;
        st.trial_count = static_cast<int>(rs.size());
        double time_sum = 0.0;
        double length_sum = 0.0;
        for (const auto* r : rs) {
            time_sum += r->wall_time;
            if (r->success && r->path_length) {
                ++st.success_count;
                length_sum += *r->path_length;
            }
        }
        st.mean_wall_time = rs.empty() ? 0.0 : time_sum / static_cast<double>(rs.size());
        if (st.success_count > 0) {
            const double mean = length_sum / st.success_count;
            double sq = 0.0;
            for (const auto* r : rs) {
                if (r->success && r->path_length) {
                    sq += (*r->path_length - mean) * (*r->path_length - mean);
                }
            }
            st.mean_length = mean;
            st.std_length = std::sqrt(sq / st.success_count);
        }
        st.short_fraction = fractions.at(kind);
        out[kind] = st;
    }
    return out;
}

}  // namespace ncrrt
