#include "fdrepair/multi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fdrepair {

namespace {

struct PqEntry {
    std::int64_t gc;
    std::int64_t cost;
    int attrs;
    ExtensionVector ext;
};

struct PqLess {
    bool operator()(const PqEntry& a, const PqEntry& b) const {
        if (a.gc != b.gc) return a.gc < b.gc;
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.attrs != b.attrs) return a.attrs < b.attrs;
        return extension_cmp(a.ext, b.ext) < 0;
    }
};

} // namespace

SweepResult find_repairs_fds(SearchSpace& space, std::int64_t tau_l, std::int64_t tau_u) {
    if (tau_l < 0 || tau_l > tau_u)
        throw std::runtime_error("invalid tau range: need 0 <= tau_min <= tau_max");

    SweepResult out;
    std::int64_t tau = tau_u;

    std::set<PqEntry, PqLess> open;
    ExtensionVector root = empty_extension(space.sigma().size());
    open.insert({space.compute_gc(root, tau), space.cost(root), 0, root});

    while (!open.empty() && tau >= tau_l) {
        PqEntry top = *open.begin();
        open.erase(open.begin());
        ++out.totals.visited;

        const auto& info = space.goal_info(top.ext);
        if (info.delta_p <= tau) {
            FrontierPoint p;
            p.extension = top.ext;
            p.cost = top.cost;
            p.delta_p = info.delta_p;
            p.cover_size = info.cover_size;
            p.stats_at_record = out.totals;
            out.points.push_back(std::move(p));

            tau = info.delta_p - 1;
            // gc depends on tau; refresh the open list, dropping states that
            // can no longer lead to goals
            std::set<PqEntry, PqLess> refreshed;
            for (const PqEntry& e : open) {
                std::int64_t gc = space.compute_gc(e.ext, tau);
                if (gc == kInfCost) continue;
                refreshed.insert({gc, e.cost, e.attrs, e.ext});
            }
            open.swap(refreshed);
        }

        ++out.totals.expanded;
        for (auto& child : space.children(top.ext)) {
            std::int64_t gc = space.compute_gc(child, tau);
            if (gc == kInfCost) continue;
            std::int64_t c = space.cost(child);
            int attrs = extension_attr_count(child);
            open.insert({gc, c, attrs, std::move(child)});
        }
    }
    return out;
}

SweepResult find_repairs_fds(const VInstance& inst, const FDSet& sigma, std::int64_t tau_l,
                             std::int64_t tau_u, const Weighter& weighter, int heuristic_k) {
    SearchSpace space(inst, sigma, weighter, heuristic_k);
    return find_repairs_fds(space, tau_l, tau_u);
}

RepairFrontier materialize_frontier(SearchSpace& space, const SweepResult& sweep,
                                    std::int64_t tau_u, std::uint64_t seed) {
    RepairFrontier f;
    f.sweep_totals = sweep.totals;
    f.delta_p_sigma = space.goal_info(empty_extension(space.sigma().size())).delta_p;
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
        const FrontierPoint& p = sweep.points[i];
        FrontierEntry entry;
        entry.tau_hi = (i == 0) ? tau_u : sweep.points[i - 1].delta_p - 1;
        entry.tau_lo = p.delta_p;

        RepairResult& r = entry.repair;
        r.found = true;
        r.seed = seed;
        r.extension = p.extension;
        r.sigma_prime = apply_extension(space.sigma(), p.extension);
        r.dist_c = p.cost;
        r.delta_p = p.delta_p;
        r.cover_size = p.cover_size;
        r.stats = p.stats_at_record;
        r.instance_prime = repair_data(r.sigma_prime, space.instance(), seed);
        r.edits = dist_d(space.instance(), r.instance_prime);
        r.dist_d = r.edits.count();

        f.entries.push_back(std::move(entry));
    }
    return f;
}

std::vector<RepairResult> sample_repairs(const VInstance& inst, const FDSet& sigma,
                                         const std::vector<std::int64_t>& taus,
                                         const Weighter& weighter, int heuristic_k,
                                         std::uint64_t seed, SearchStats* totals) {
    std::vector<RepairResult> out;
    SearchStats sum;
    for (std::int64_t tau : taus) {
        if (tau < 0) throw std::runtime_error("sample_repairs: tau values must be non-negative");
        RepairResult r = repair_data_fds(sigma, inst, tau, weighter, heuristic_k, seed);
        sum.visited += r.stats.visited;
        sum.expanded += r.stats.expanded;
        if (!r.found) continue;
        bool dup = false;
        for (const RepairResult& seen : out)
            if (seen.extension == r.extension) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(r));
    }
    if (totals) *totals = sum;
    return out;
}

} // namespace fdrepair
