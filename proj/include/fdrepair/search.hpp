#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "fdrepair/conflict.hpp"
#include "fdrepair/fd.hpp"
#include "fdrepair/relation.hpp"
#include "fdrepair/weights.hpp"

namespace fdrepair {

inline constexpr std::int64_t kInfCost = std::numeric_limits<std::int64_t>::max();

struct SearchStats {
    std::int64_t visited = 0;  // states popped and goal-tested
    std::int64_t expanded = 0; // states whose children were generated
    double wall_ms = 0.0;      // diagnostics only, never serialized
};

struct SearchOutcome {
    bool found = false;
    ExtensionVector extension;
    std::int64_t cost = 0;
    std::int64_t delta_p = 0;
    int cover_size = 0;
    SearchStats stats;
};

// The tree of LHS-extension vectors over one instance: unique-parent child
// enumeration, per-state delta_P with caching, and the gc lower bound.
class SearchSpace {
public:
    SearchSpace(const VInstance& inst, const FDSet& sigma, const Weighter& weighter,
                int heuristic_k);

    const VInstance& instance() const { return *inst_; }
    const FDSet& sigma() const { return sigma_; }
    const Weighter& weighter() const { return *weighter_; }
    int alpha() const { return alpha_; }
    int heuristic_k() const { return heuristic_k_; }
    const ConflictGraph& root_graph() const { return root_graph_; }
    const DifferenceCatalog& catalog() const { return catalog_; }

    std::int64_t cost(const ExtensionVector& s) const { return weighter_->dist_c(s); }

    // States whose unique parent is s: add one attribute B to position j such
    // that B is the greatest attribute of the child's union and j is the last
    // position holding B.
    std::vector<ExtensionVector> children(const ExtensionVector& s) const;
    ExtensionVector parent(const ExtensionVector& s) const;

    struct GoalInfo {
        std::int64_t delta_p = 0;
        int cover_size = 0;
    };
    const GoalInfo& goal_info(const ExtensionVector& s);

    // Catalog entries whose difference set still violates sigma(s).
    std::vector<int> violated_entries(const ExtensionVector& s) const;
    bool entry_violated(const ExtensionVector& s, const AttrSet& d) const;

    // Heuristic subset: favor large edge counts, keep pairwise overlap small,
    // cap at heuristic_k.
    std::vector<int> select_subset(const std::vector<int>& violated) const;

    // All minimal goal states descending from S (componentwise) that handle
    // the remaining difference sets, within budget tau.
    std::vector<ExtensionVector> desc_goal_states(const ExtensionVector& S,
                                                  const ExtensionVector& Sc,
                                                  const std::vector<ConflictEdge>& unresolved,
                                                  const std::vector<int>& dc,
                                                  std::int64_t tau) const;

    // Minimum cost across desc_goal_states over the selected subset, or
    // kInfCost when none survives.
    std::int64_t compute_gc(const ExtensionVector& s, std::int64_t tau);

    const std::vector<ConflictEdge>& entry_edges(int entry_index) const {
        return entry_edges_.at(entry_index);
    }

private:
    const VInstance* inst_;
    FDSet sigma_;
    const Weighter* weighter_;
    int heuristic_k_;
    int alpha_;
    ConflictGraph root_graph_;
    DifferenceCatalog catalog_;
    std::vector<std::vector<ConflictEdge>> entry_edges_;
    std::vector<AttrSet> fd_forbidden_; // X_i plus A_i per FD
    std::map<std::vector<std::uint64_t>, GoalInfo> goal_cache_;
};

std::vector<std::uint64_t> ext_key(const ExtensionVector& s);

// Standalone form of the subset heuristic, over a whole catalog.
std::vector<AttrSet> select_diffset_subset(const DifferenceCatalog& catalog, int k);

// A* over the extension tree; open list ordered by (gc, cost, appended
// attribute count, canonical extension order).
SearchOutcome modify_fds_astar(SearchSpace& space, std::int64_t tau);
SearchOutcome modify_fds_astar(const VInstance& inst, const FDSet& sigma, std::int64_t tau,
                               const Weighter& weighter, int heuristic_k);

// Cost-ordered baseline with the same contract.
SearchOutcome modify_fds_bestfirst(SearchSpace& space, std::int64_t tau);
SearchOutcome modify_fds_bestfirst(const VInstance& inst, const FDSet& sigma, std::int64_t tau,
                                   const Weighter& weighter);

} // namespace fdrepair
