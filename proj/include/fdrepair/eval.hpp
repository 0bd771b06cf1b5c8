#pragma once

#include <cstdint>
#include <vector>

#include "fdrepair/fd.hpp"
#include "fdrepair/relation.hpp"

namespace fdrepair {

struct InjectionResult {
    VInstance dirty;
    CellDelta injected;
    int shortfall = 0; // injections requested but not achievable
};

// Seeds errors into a clean instance so that every changed cell produces a
// new violation: either overwrite an agreeing pair's RHS with a fresh
// constant, or copy one LHS attribute across an almost-agreeing pair.  Types
// alternate 50/50 while both have opportunities.
InjectionResult perturb_data(const VInstance& clean, const FDSet& sigma, double rate,
                             std::uint64_t seed);

struct FdPerturbation {
    FDSet dirty;
    ExtensionVector removed; // per-FD attributes removed from the LHS
};

// Removes ceil(rate * total LHS attributes) attributes uniformly at random,
// never emptying a LHS.  apply_extension(dirty, removed) reconstructs the
// input.
FdPerturbation perturb_fds(const FDSet& clean, double rate, std::uint64_t seed,
                           const Schema& schema);

struct QualityScores {
    double data_precision = 0;
    double data_recall = 0;
    double fd_precision = 0;
    double fd_recall = 0;
    double data_f = 0;
    double fd_f = 0;
    double combined_f = 0;
};

// Precision/recall of cell modifications and of re-appended LHS attributes,
// per the protocol: a cell modification is correct when the cell was
// erroneous and the repair restored the clean value or used a variable.
QualityScores score_repair(const VInstance& clean, const VInstance& dirty,
                           const VInstance& repaired, const FDSet& sigma_clean,
                           const FDSet& sigma_dirty, const FDSet& sigma_repaired);

// tau = ceil(tau_r * delta_P(sigma, inst)); the computable surrogate stands
// in for the exact minimum number of changes.
std::int64_t tau_from_relative(double tau_r, const FDSet& sigma, const VInstance& inst);

} // namespace fdrepair
