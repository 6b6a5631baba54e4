// File formats: scenario JSON, plan outcome JSON, tree dump, trial CSV and
// campaign summary JSON.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ncrrt/bench.hpp"
#include "ncrrt/planners.hpp"
#include "ncrrt/space.hpp"
#include "ncrrt/tree.hpp"

namespace ncrrt::io {

/// Parses and validates a scenario document. Throws ValidationError with a
/// description of the offending field.
[[nodiscard]] Scenario scenario_from_json(const nlohmann::json& doc);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);
[[nodiscard]] nlohmann::json to_json(const Scenario& s);

/// [{id, x, y, parent}, ...] in insertion order; the root's parent is null.
[[nodiscard]] nlohmann::json tree_dump(const Tree& t);

[[nodiscard]] nlohmann::json to_json(const PlanOutcome& out, bool include_tree);

inline constexpr std::string_view kCsvHeader =
    "scenario,planner,seed,success,iterations,path_length,wall_time_s";

/// Formats with 6 significant digits (printf "%.6g").
[[nodiscard]] std::string format_real(double v);

void write_csv(std::ostream& os, std::span<const TrialRecord> records);
/// Throws ValidationError on a header mismatch or malformed row.
[[nodiscard]] std::vector<TrialRecord> read_csv(std::istream& is);

[[nodiscard]] nlohmann::json summary_json(std::span<const TrialRecord> records, double threshold,
                                          int bins);

}  // namespace ncrrt::io
