#include "fdrepair/repair.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdrepair {

VariableAllocator::VariableAllocator(const VInstance& inst) {
    next_.resize(inst.attr_count());
    for (int a = 0; a < inst.attr_count(); ++a) next_[a] = inst.max_var_index(a) + 1;
}

std::optional<Tuple> find_assignment(const VInstance& iprime, int tid, const AttrSet& fixed,
                                     const FDSet& sigma_prime, const std::vector<char>& in_cover,
                                     VariableAllocator& vars) {
    if (fixed.empty()) throw std::runtime_error("find_assignment: fixed set must be non-empty");
    const int m = iprime.attr_count();
    Tuple tc;
    tc.reserve(m);
    for (int a = 0; a < m; ++a)
        tc.push_back(fixed.contains(a) ? iprime.cell(tid, a) : vars.fresh(a));
    AttrSet pinned = fixed;

    std::vector<std::vector<int>> lhs_attrs;
    lhs_attrs.reserve(sigma_prime.size());
    for (const FD& fd : sigma_prime.fds) lhs_attrs.push_back(fd.lhs.attrs());

    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < iprime.tuple_count() && !changed; ++t) {
            if (in_cover[t]) continue;
            for (int fi = 0; fi < sigma_prime.size() && !changed; ++fi) {
                const FD& fd = sigma_prime[fi];
                bool lhs_eq = true;
                for (int a : lhs_attrs[fi])
                    if (!cells_equal(tc[a], iprime.cell(t, a))) {
                        lhs_eq = false;
                        break;
                    }
                if (!lhs_eq || cells_equal(tc[fd.rhs], iprime.cell(t, fd.rhs))) continue;
                if (pinned.contains(fd.rhs)) return std::nullopt;
                tc[fd.rhs] = iprime.cell(t, fd.rhs);
                pinned = pinned.with(fd.rhs);
                changed = true;
            }
        }
    }
    return tc;
}

std::optional<Tuple> find_assignment(const VInstance& iprime, int tid, const AttrSet& fixed,
                                     const FDSet& sigma_prime, const VertexCover& cover,
                                     VariableAllocator& vars) {
    std::vector<char> in_cover(iprime.tuple_count(), 0);
    for (int t : cover.cover) in_cover.at(t) = 1;
    return find_assignment(iprime, tid, fixed, sigma_prime, in_cover, vars);
}

VInstance repair_data(const FDSet& sigma_prime, const VInstance& inst, std::uint64_t seed) {
    Rng rng(seed);
    ConflictGraph g = build_conflict_graph(inst, sigma_prime);
    VertexCover cover = greedy_vertex_cover(g);

    VInstance iprime = inst;
    std::vector<char> in_cover(inst.tuple_count(), 0);
    for (int t : cover.cover) in_cover[t] = 1;

    std::vector<int> order = cover.cover;
    rng.shuffle(order);
    VariableAllocator vars(inst);

    const int m = inst.attr_count();
    for (int tid : order) {
        std::vector<int> attrs(m);
        for (int a = 0; a < m; ++a) attrs[a] = a;
        rng.shuffle(attrs);

        AttrSet fixed = AttrSet::single(attrs[0]);
        auto tc = find_assignment(iprime, tid, fixed, sigma_prime, in_cover, vars);
        if (!tc)
            throw std::logic_error("repair_data: no assignment with a single fixed attribute");
        for (int i = 1; i < m; ++i) {
            int a = attrs[i];
            fixed = fixed.with(a);
            auto next = find_assignment(iprime, tid, fixed, sigma_prime, in_cover, vars);
            if (!next)
                iprime.set_cell(tid, a, (*tc)[a]);
            else
                tc = std::move(next);
        }
        in_cover[tid] = 0;
    }
    return iprime;
}

RepairResult repair_data_fds(SearchSpace& space, std::int64_t tau, std::uint64_t seed) {
    RepairResult r;
    r.seed = seed;
    SearchOutcome outcome = modify_fds_astar(space, tau);
    r.stats = outcome.stats;
    if (!outcome.found) {
        r.found = false;
        r.reason = "no goal state: no LHS extension reaches delta_p <= " + std::to_string(tau);
        return r;
    }
    r.found = true;
    r.extension = outcome.extension;
    r.sigma_prime = apply_extension(space.sigma(), outcome.extension);
    r.dist_c = outcome.cost;
    r.delta_p = outcome.delta_p;
    r.cover_size = outcome.cover_size;
    r.instance_prime = repair_data(r.sigma_prime, space.instance(), seed);
    r.edits = dist_d(space.instance(), r.instance_prime);
    r.dist_d = r.edits.count();
    return r;
}

RepairResult repair_data_fds(const FDSet& sigma, const VInstance& inst, std::int64_t tau,
                             const Weighter& weighter, int heuristic_k, std::uint64_t seed) {
    SearchSpace space(inst, sigma, weighter, heuristic_k);
    return repair_data_fds(space, tau, seed);
}

} // namespace fdrepair
