#include "ncrrt/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "ncrrt/bench.hpp"
#include "ncrrt/io.hpp"
#include "ncrrt/planners.hpp"
#include "ncrrt/render.hpp"

namespace ncrrt::cli {

namespace {

void add_param_flags(CLI::App& cmd, PlannerParams& params) {
    cmd.add_option("--epsilon", params.epsilon, "Step size")->capture_default_str();
    cmd.add_option("--k", params.max_iterations, "Iteration cap K")->capture_default_str();
    cmd.add_option("--p", params.sampler.p, "Probability of a uniform sample")->capture_default_str();
    cmd.add_option("--alpha", params.alpha, "NCRRT narrow-sample period")->capture_default_str();
    cmd.add_option("--lambda", params.sampler.lambda, "Cluster radius")->capture_default_str();
    cmd.add_option("--sigma", params.sampler.sigma, "Narrowness threshold (percent)")->capture_default_str();
    cmd.add_option("--cluster-size", params.sampler.cluster_size, "Cluster points N")->capture_default_str();
    cmd.add_option("--max-attempts", params.sampler.max_attempts, "Narrow candidate budget M")
        ->capture_default_str();
    cmd.add_option("--delta", params.delta, "Edge-check resolution")->capture_default_str();
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    return true;
}

std::vector<PlannerKind> parse_planner_list(const std::string& list) {
    std::vector<PlannerKind> kinds;
    std::istringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto kind = parse_planner(name);
        if (!kind) {
            throw ValidationError("unknown planner '" + name + "' (expected basic, goalbias, goalzoom, ncrrt)");
        }
        kinds.push_back(*kind);
    }
    if (kinds.empty()) {
        throw ValidationError("--planners is empty");
    }
    return kinds;
}

struct PlanArgs {
    std::string scenario;
    std::string planner;
    std::uint64_t seed{0};
    PlannerParams params;
    std::string svg;
    std::string json;
    bool tree{false};
};

int cmd_plan(const PlanArgs& a, std::ostream& out, std::ostream& err) {
    const Scenario s = io::load_scenario(a.scenario);
    const auto kind = parse_planner(a.planner);
    if (!kind) {
        throw ValidationError("unknown planner '" + a.planner + "'");
    }
    RngStream rng(a.seed);
    const PlanOutcome outcome = plan(*kind, s, a.params, rng);

    if (!a.json.empty() && !write_text(a.json, io::to_json(outcome, a.tree).dump(2) + "\n", err)) {
        return kUsage;
    }
    if (!a.svg.empty() && !write_text(a.svg, render_svg(outcome, s), err)) {
        return kUsage;
    }
    out << to_string(*kind) << ": " << (outcome.success ? "success" : "failure") << " after "
        << outcome.iterations_used << " iterations";
    if (outcome.path_length) {
        out << ", path length " << io::format_real(*outcome.path_length);
    }
    out << ", " << outcome.tree.size() << " nodes\n";
    return outcome.success ? kOk : kPlannerFailure;
}

struct BenchArgs {
    std::string scenario;
    std::string planners;
    int trials{100};
    std::uint64_t seed_base{0};
    std::string out;
    unsigned workers{1};
    PlannerParams params;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    const Scenario s = io::load_scenario(a.scenario);
    const auto kinds = parse_planner_list(a.planners);
    std::ofstream f(a.out, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << a.out << '\n';
        return kUsage;
    }
    const auto records = run_campaign(s, kinds, a.params, a.trials, a.seed_base, {.workers = a.workers});
    io::write_csv(f, records);
    if (!f.flush()) {
        err << "error: cannot write " << a.out << '\n';
        return kUsage;
    }
    out << "wrote " << records.size() << " trials to " << a.out << '\n';
    return kOk;
}

struct StatsArgs {
    std::string in;
    int bins{30};
    std::optional<double> threshold;
    std::string scenario;
    std::string out;
};

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream f(a.in);
    if (!f) {
        err << "error: cannot open " << a.in << '\n';
        return kUsage;
    }
    const auto records = io::read_csv(f);
    std::optional<double> threshold = a.threshold;
    if (!threshold && !a.scenario.empty()) {
        threshold = io::load_scenario(a.scenario).short_path_threshold;
    }
    if (!threshold) {
        err << "error: no short-path threshold; pass --threshold or a --scenario that defines one\n";
        return kUsage;
    }
    if (!(*threshold > 0.0)) {
        err << "error: --threshold must be positive\n";
        return kUsage;
    }
    if (a.bins < 1) {
        err << "error: --bins must be at least 1\n";
        return kUsage;
    }
    const std::string text = io::summary_json(records, *threshold, a.bins).dump(2) + "\n";
    if (a.out.empty()) {
        out << text;
        return kOk;
    }
    return write_text(a.out, text, err) ? kOk : kUsage;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sampling-based planners for maps with narrow channels", "ncrrt"};
    app.require_subcommand(1);

    PlanArgs plan_args;
    auto* plan_cmd = app.add_subcommand("plan", "Run a single planner and write its artifacts");
    plan_cmd->add_option("--scenario", plan_args.scenario, "Scenario JSON file")->required();
    plan_cmd->add_option("--planner", plan_args.planner, "basic | goalbias | goalzoom | ncrrt")->required();
    plan_cmd->add_option("--seed", plan_args.seed, "RNG seed")->required();
    plan_cmd->add_option("--svg", plan_args.svg, "Write an SVG rendering");
    plan_cmd->add_option("--json", plan_args.json, "Write the outcome as JSON");
    plan_cmd->add_flag("--tree", plan_args.tree, "Include the tree dump in the JSON output");
    add_param_flags(*plan_cmd, plan_args.params);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Run a multi-trial campaign and write CSV");
    bench_cmd->add_option("--scenario", bench_args.scenario, "Scenario JSON file")->required();
    bench_cmd->add_option("--planners", bench_args.planners, "Comma-separated planner list")->required();
    bench_cmd->add_option("--trials", bench_args.trials, "Trials per planner")->capture_default_str();
    bench_cmd->add_option("--seed-base", bench_args.seed_base, "Base seed")->capture_default_str();
    bench_cmd->add_option("--out", bench_args.out, "Results CSV")->required();
    bench_cmd->add_option("--workers", bench_args.workers, "Worker threads (0 = all cores)")
        ->capture_default_str();
    add_param_flags(*bench_cmd, bench_args.params);

    StatsArgs stats_args;
    auto* stats_cmd = app.add_subcommand("stats", "Summarize a results CSV as JSON");
    stats_cmd->add_option("--in", stats_args.in, "Results CSV")->required();
    stats_cmd->add_option("--bins", stats_args.bins, "Histogram bins")->capture_default_str();
    stats_cmd->add_option("--threshold", stats_args.threshold, "Short-path threshold");
    stats_cmd->add_option("--scenario", stats_args.scenario, "Scenario file supplying the default threshold");
    stats_cmd->add_option("--out", stats_args.out, "Summary JSON (stdout when omitted)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*plan_cmd) {
            return cmd_plan(plan_args, out, err);
        }
        if (*bench_cmd) {
            return cmd_bench(bench_args, out, err);
        }
        return cmd_stats(stats_args, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SamplingExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace ncrrt::cli
