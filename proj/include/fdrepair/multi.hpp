#pragma once

#include <cstdint>
#include <vector>

#include "fdrepair/repair.hpp"
#include "fdrepair/search.hpp"

namespace fdrepair {

struct FrontierPoint {
    ExtensionVector extension;
    std::int64_t cost = 0;
    std::int64_t delta_p = 0;
    int cover_size = 0;
    SearchStats stats_at_record; // cumulative sweep counters when recorded
};

struct SweepResult {
    std::vector<FrontierPoint> points; // delta_p strictly decreasing
    SearchStats totals;
};

// Single A* sweep over [tau_l, tau_u]: start at tau_u; on each goal, record
// it, shrink tau to its delta_p - 1, recompute gc for the open list, keep
// going until the list empties or tau drops below tau_l.
SweepResult find_repairs_fds(SearchSpace& space, std::int64_t tau_l, std::int64_t tau_u);
SweepResult find_repairs_fds(const VInstance& inst, const FDSet& sigma, std::int64_t tau_l,
                             std::int64_t tau_u, const Weighter& weighter, int heuristic_k);

struct FrontierEntry {
    RepairResult repair;
    std::int64_t tau_lo = 0;
    std::int64_t tau_hi = 0;
};

struct RepairFrontier {
    std::vector<FrontierEntry> entries; // ordered by decreasing tau_hi
    std::int64_t delta_p_sigma = 0;     // delta_P of the unmodified FDs
    SearchStats sweep_totals;
};

// Runs the data repair for every recorded FD modification and assigns tau
// bands: entry i spans [delta_p_i, previous delta_p - 1], the first capped at
// tau_u.
RepairFrontier materialize_frontier(SearchSpace& space, const SweepResult& sweep,
                                    std::int64_t tau_u, std::uint64_t seed);

// Independent full repairs at the given tau values, deduplicated by FD
// modification.  Serves as the correctness oracle for the sweep.
std::vector<RepairResult> sample_repairs(const VInstance& inst, const FDSet& sigma,
                                         const std::vector<std::int64_t>& taus,
                                         const Weighter& weighter, int heuristic_k,
                                         std::uint64_t seed, SearchStats* totals = nullptr);

} // namespace fdrepair
