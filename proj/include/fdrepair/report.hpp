#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "fdrepair/conflict.hpp"
#include "fdrepair/eval.hpp"
#include "fdrepair/multi.hpp"
#include "fdrepair/repair.hpp"

namespace fdrepair {

using ordered_json = nlohmann::ordered_json;

// Echoed into every repair report; identical configs must yield identical
// bytes, so wall-clock timings stay out of these structures.
struct RunEcho {
    std::int64_t tau = 0;
    std::optional<double> tau_rel;
    std::string weight;
    int heuristic_k = 3;
    std::uint64_t seed = 0;
};

ordered_json repair_report(const RepairResult& r, const Schema& schema, const RunEcho& echo);

ordered_json frontier_report(const RepairFrontier& f, const Schema& schema, std::int64_t tau_min,
                             std::int64_t tau_max, const std::string& weight, int heuristic_k,
                             std::uint64_t seed);

ordered_json scores_report(const QualityScores& s);
std::string scores_table(const QualityScores& s);

ordered_json inject_report(const InjectionResult& data, const FdPerturbation& fds,
                           const Schema& schema, double data_rate, double fd_rate,
                           std::uint64_t seed);

ordered_json graph_report(const ConflictGraph& g, const DifferenceCatalog& cat,
                          const Schema& schema);

std::string render_json(const ordered_json& j);

} // namespace fdrepair
