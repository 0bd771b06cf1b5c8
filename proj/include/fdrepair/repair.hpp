#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdrepair/conflict.hpp"
#include "fdrepair/fd.hpp"
#include "fdrepair/relation.hpp"
#include "fdrepair/rng.hpp"
#include "fdrepair/search.hpp"
#include "fdrepair/weights.hpp"

namespace fdrepair {

// Fresh per-attribute variable indices, starting above anything present in
// the instance the allocator was built from.
class VariableAllocator {
public:
    explicit VariableAllocator(const VInstance& inst);
    CellValue fresh(int attr) { return CellValue::variable(attr, next_.at(attr)++); }

private:
    std::vector<std::int64_t> next_;
};

// Searches for values of the attributes outside `fixed` such that the
// candidate tuple violates nothing against the tuples outside the cover.
// Returns nullopt when no valid assignment exists; that is an answer, not an
// error.
std::optional<Tuple> find_assignment(const VInstance& iprime, int tid, const AttrSet& fixed,
                                     const FDSet& sigma_prime, const std::vector<char>& in_cover,
                                     VariableAllocator& vars);
std::optional<Tuple> find_assignment(const VInstance& iprime, int tid, const AttrSet& fixed,
                                     const FDSet& sigma_prime, const VertexCover& cover,
                                     VariableAllocator& vars);

// Tuple-by-tuple repair over a greedy vertex cover of the conflict graph.
// Changes cells only in cover tuples, at most min(|R|-1, |Sigma'|) per tuple.
VInstance repair_data(const FDSet& sigma_prime, const VInstance& inst, std::uint64_t seed);

struct RepairResult {
    bool found = false;
    std::string reason; // set when not found
    ExtensionVector extension;
    FDSet sigma_prime;
    VInstance instance_prime;
    std::int64_t dist_c = 0;
    int dist_d = 0;
    std::int64_t delta_p = 0;
    int cover_size = 0;
    CellDelta edits;
    SearchStats stats;
    std::uint64_t seed = 0;
};

// Algorithm pipeline: find the cheapest LHS extension whose delta_P fits the
// budget, then materialize the data repair.
RepairResult repair_data_fds(const FDSet& sigma, const VInstance& inst, std::int64_t tau,
                             const Weighter& weighter, int heuristic_k, std::uint64_t seed);
RepairResult repair_data_fds(SearchSpace& space, std::int64_t tau, std::uint64_t seed);

} // namespace fdrepair
