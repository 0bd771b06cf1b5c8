#pragma once

#include <cstdint>
#include <vector>

#include "fdrepair/attrset.hpp"
#include "fdrepair/fd.hpp"
#include "fdrepair/relation.hpp"

namespace fdrepair {

// Unordered tuple pair (u < v) labeled with the indices of the FDs the pair
// violates.
struct ConflictEdge {
    int u;
    int v;
    std::uint64_t fd_mask;
};

struct ConflictGraph {
    int vertex_count = 0;
    std::vector<ConflictEdge> edges; // sorted by (u, v), labels non-empty
};

// Partition-based construction: group tuples by LHS projection per FD,
// sub-group by RHS, emit cross-sub-group pairs.  Edge emission runs in
// parallel when OpenMP is enabled; output is deterministic (sorted).
ConflictGraph build_conflict_graph(const VInstance& inst, const FDSet& sigma);

// Serial brute-force reference over all tuple pairs.  Kept as the oracle for
// the partitioned kernel and for benchmarking.
ConflictGraph build_conflict_graph_reference(const VInstance& inst, const FDSet& sigma);

struct DifferenceEntry {
    AttrSet diffset;
    std::vector<int> edge_indices; // into ConflictGraph::edges, ascending
};

// Edges partitioned by their difference set; entries in canonical attribute
// set order.  Every edge appears under exactly one entry.
struct DifferenceCatalog {
    std::vector<DifferenceEntry> entries;
    const DifferenceEntry* find(const AttrSet& d) const;
};

DifferenceCatalog difference_sets(const VInstance& inst, const ConflictGraph& graph);
DifferenceCatalog difference_sets_reference(const VInstance& inst, const ConflictGraph& graph);

// Difference set of one tuple pair.
AttrSet pair_diffset(const VInstance& inst, int t1, int t2);

// An edge with difference set d violates X -> A iff X and d are disjoint and
// A is in d.
bool diffset_violates(const AttrSet& d, const FD& fd);

// FD indices of sigma violated by difference set d, as a bit mask.
std::uint64_t diffset_violation_mask(const AttrSet& d, const FDSet& sigma);

struct VertexCover {
    std::vector<int> cover; // ascending tuple ids
    int size() const { return static_cast<int>(cover.size()); }
};

// Edge-greedy 2-approximation: repeatedly take the lexicographically
// smallest uncovered edge and add both endpoints.  |cover| = 2 * (maximal
// matching size).
VertexCover greedy_vertex_cover(const ConflictGraph& graph);
VertexCover greedy_vertex_cover(const std::vector<ConflictEdge>& sorted_edges);

// Matching size behind the greedy cover; a lower bound on any vertex cover
// of the same edges.
inline int greedy_matching_size(const VertexCover& c) { return c.size() / 2; }

// alpha = min(|R| - 1, |Sigma|); |Sigma| is the original FD count, which
// extension preserves.
int repair_alpha(const Schema& schema, int fd_count);

struct DeltaP {
    std::int64_t value = 0; // alpha * cover size
    VertexCover cover;
    ConflictGraph graph;
};

DeltaP delta_p(const VInstance& inst, const FDSet& sigma_prime);

} // namespace fdrepair
