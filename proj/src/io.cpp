#include "ncrrt/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ncrrt::io {

using nlohmann::json;

namespace {

double number_at(const json& v, const std::string& what) {
    if (!v.is_number()) {
        throw ValidationError(what + " must be a number");
    }
    return v.get<double>();
}

std::vector<double> numbers(const json& v, std::size_t n, const std::string& what) {
    if (!v.is_array() || v.size() != n) {
        throw ValidationError(what + " must be an array of " + std::to_string(n) + " numbers");
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(number_at(v[i], what + "[" + std::to_string(i) + "]"));
    }
    return out;
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ValidationError(std::string("scenario: missing field '") + key + "'");
    }
    return *it;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep)) {
        parts.push_back(cur);
    }
    if (!line.empty() && line.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError("csv: bad " + what + " '" + text + "'");
    }
    return value;
}

double parse_real(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw ValidationError("csv: bad " + what + " '" + text + "'");
    }
    return v;
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw ValidationError("scenario: document must be a JSON object");
    }
    Scenario s;
    const auto& name = field(doc, "name");
    if (!name.is_string()) {
        throw ValidationError("scenario: 'name' must be a string");
    }
    s.name = name.get<std::string>();

    const auto b = numbers(field(doc, "bounds"), 4, "bounds");
    s.bounds = {b[0], b[1], b[2], b[3]};

    const auto& obstacles = field(doc, "obstacles");
    if (!obstacles.is_array()) {
        throw ValidationError("scenario: 'obstacles' must be an array");
    }
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const auto o = numbers(obstacles[i], 4, "obstacles[" + std::to_string(i) + "]");
        s.obstacles.push_back({o[0], o[1], o[2], o[3]});
    }

    const auto start = numbers(field(doc, "start"), 2, "start");
    const auto goal = numbers(field(doc, "goal"), 2, "goal");
    s.start = {start[0], start[1]};
    s.goal = {goal[0], goal[1]};

    if (auto it = doc.find("short_path_threshold"); it != doc.end() && !it->is_null()) {
        s.short_path_threshold = number_at(*it, "short_path_threshold");
    }
    validate(s);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open scenario file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("scenario file " + path.string() + " is not valid JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

json to_json(const Scenario& s) {
    json doc{{"name", s.name},
             {"bounds", {s.bounds.x_min, s.bounds.y_min, s.bounds.x_max, s.bounds.y_max}},
             {"obstacles", json::array()},
             {"start", {s.start.x, s.start.y}},
             {"goal", {s.goal.x, s.goal.y}}};
    for (const auto& o : s.obstacles) {
        doc["obstacles"].push_back({o.x_min, o.y_min, o.x_max, o.y_max});
    }
    if (s.short_path_threshold) {
        doc["short_path_threshold"] = *s.short_path_threshold;
    }
    return doc;
}

json tree_dump(const Tree& t) {
    json out = json::array();
    const auto nodes = t.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        json rec{{"id", i}, {"x", nodes[i].config.x}, {"y", nodes[i].config.y}};
        rec["parent"] = nodes[i].parent ? json(nodes[i].parent->index) : json(nullptr);
        out.push_back(std::move(rec));
    }
    return out;
}

json to_json(const PlanOutcome& out, bool include_tree) {
    json doc{{"success", out.success},
             {"iterations", out.iterations_used},
             {"path", json::array()},
             {"path_length", out.path_length ? json(*out.path_length) : json(nullptr)},
             {"wall_time_s", out.wall_time}};
    if (out.path) {
        for (const auto& c : *out.path) {
            doc["path"].push_back({c.x, c.y});
        }
    }
    if (include_tree) {
        doc["tree"] = tree_dump(out.tree);
    }
    return doc;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_csv(std::ostream& os, std::span<const TrialRecord> records) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.scenario_name << ',' << to_string(r.planner) << ',' << r.seed << ','
           << (r.success ? 1 : 0) << ',' << r.iterations << ','
           << (r.path_length ? format_real(*r.path_length) : std::string{}) << ','
           << format_real(r.wall_time) << '\n';
    }
}

std::vector<TrialRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw ValidationError("csv: missing header");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw ValidationError("csv: unexpected header '" + line + "'");
    }
    std::vector<TrialRecord> records;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() != 7) {
            throw ValidationError("csv: row " + std::to_string(row) + " has " +
                                  std::to_string(cols.size()) + " columns, expected 7");
        }
        TrialRecord r;
        r.scenario_name = cols[0];
        const auto kind = parse_planner(cols[1]);
        if (!kind) {
            throw ValidationError("csv: row " + std::to_string(row) + " has unknown planner '" + cols[1] + "'");
        }
        r.planner = *kind;
        r.seed = parse_number<std::uint64_t>(cols[2], "seed");
        if (cols[3] != "0" && cols[3] != "1") {
            throw ValidationError("csv: row " + std::to_string(row) + " has bad success flag '" + cols[3] + "'");
        }
        r.success = cols[3] == "1";
        r.iterations = parse_number<int>(cols[4], "iterations");
        if (!cols[5].empty()) {
            r.path_length = parse_real(cols[5], "path_length");
        }
        if (r.success != r.path_length.has_value()) {
            throw ValidationError("csv: row " + std::to_string(row) +
                                  ": path_length must be present exactly when success is 1");
        }
        r.wall_time = parse_real(cols[6], "wall_time_s");
        records.push_back(std::move(r));
    }
    return records;
}

json summary_json(std::span<const TrialRecord> records, double threshold, int bins) {
    const auto stats = summarize(records, threshold);
    json doc = json::object();
    for (const auto& [kind, st] : stats) {
        std::vector<double> lengths;
        for (const auto& r : records) {
            if (r.planner == kind && r.success && r.path_length) {
                lengths.push_back(*r.path_length);
            }
        }
        json hist{{"edges", json::array()}, {"counts", json::array()}};
        if (!lengths.empty()) {
            const auto h = make_histogram(lengths, bins);
            hist = {{"edges", h.bin_edges}, {"counts", h.counts}};
        }
        doc[std::string(to_string(kind))] = {
            {"mean_length", st.mean_length ? json(*st.mean_length) : json(nullptr)},
            {"std_length", st.std_length ? json(*st.std_length) : json(nullptr)},
            {"short_fraction", st.short_fraction},
            {"mean_wall_time_s", st.mean_wall_time},
            {"success_count", st.success_count},
            {"histogram", std::move(hist)},
        };
    }
    return doc;
}

}  // namespace ncrrt::io
