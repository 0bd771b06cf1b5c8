#include "fdrepair/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace fdrepair {

namespace {

std::vector<ConflictEdge> merge_edges(const std::vector<ConflictEdge>& a,
                                      const std::vector<ConflictEdge>& b) {
    std::vector<ConflictEdge> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto less = [](const ConflictEdge& x, const ConflictEdge& y) {
        if (x.u != y.u) return x.u < y.u;
        return x.v < y.v;
    };
    while (i < a.size() && j < b.size()) {
        if (less(a[i], b[j])) out.push_back(a[i++]);
        else out.push_back(b[j++]);
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

// Exact decision "is there a vertex cover of size <= bound", branching on an
// endpoint of the first live edge.  The budget is charged in edge scans; on
// exhaustion the answer defaults to yes, which only weakens the heuristic,
// never its admissibility.
class CoverDecider {
public:
    CoverDecider(const std::vector<ConflictEdge>& edges, long budget)
        : edges_(edges), budget_(budget) {
        int max_vertex = 0;
        for (const ConflictEdge& e : edges) max_vertex = std::max(max_vertex, e.v);
        removed_.assign(max_vertex + 1, 0);
        used_.assign(max_vertex + 1, 0);
    }

    bool within(int bound) {
        budget_ -= static_cast<long>(edges_.size());
        if (budget_ <= 0) return true;
        std::copy(removed_.begin(), removed_.end(), used_.begin());
        int matching = 0, first_u = -1, first_v = -1;
        for (const ConflictEdge& e : edges_) {
            if (removed_[e.u] || removed_[e.v]) continue;
            if (first_u < 0) {
                first_u = e.u;
                first_v = e.v;
            }
            if (!used_[e.u] && !used_[e.v]) {
                used_[e.u] = used_[e.v] = 1;
                ++matching;
            }
        }
        if (first_u < 0) return true;
        if (bound <= 0 || matching > bound) return false;
        removed_[first_u] = 1;
        bool ok = within(bound - 1);
        removed_[first_u] = 0;
        if (ok) return true;
        removed_[first_v] = 1;
        ok = within(bound - 1);
        removed_[first_v] = 0;
        return ok;
    }

private:
    const std::vector<ConflictEdge>& edges_;
    std::vector<char> removed_;
    std::vector<char> used_;
    long budget_;
};

// A goal state that leaves this edge set violated pays an even greedy cover
// of at least 2*ceil(opt/2) vertices for it, so skipping is consistent with
// some goal iff 2*alpha*ceil(opt/2) <= tau.  That threshold equals an exact
// cover decision with bound 2*floor(tau/(2*alpha)).
bool may_leave_unresolved(const std::vector<ConflictEdge>& edges, int alpha, std::int64_t tau) {
    if (edges.empty()) return true;
    if (tau < 2 * alpha) return false; // even a single edge costs 2*alpha
    std::int64_t bound64 = 2 * (tau / (2 * alpha));
    int greedy_size = greedy_vertex_cover(edges).size();
    if (greedy_size <= bound64) return true;
    if (greedy_size / 2 > bound64) return false;
    CoverDecider decider(edges, 2000000);
    return decider.within(static_cast<int>(bound64));
}

} // namespace

std::vector<std::uint64_t> ext_key(const ExtensionVector& s) {
    std::vector<std::uint64_t> key;
    key.reserve(s.size());
    for (const AttrSet& y : s) key.push_back(y.mask());
    return key;
}

SearchSpace::SearchSpace(const VInstance& inst, const FDSet& sigma, const Weighter& weighter,
                         int heuristic_k)
    : inst_(&inst), sigma_(sigma), weighter_(&weighter), heuristic_k_(heuristic_k) {
    if (heuristic_k_ < 1) throw std::runtime_error("heuristic k must be >= 1");
    alpha_ = repair_alpha(inst.schema(), sigma_.size());
    root_graph_ = build_conflict_graph(inst, sigma_);
    catalog_ = difference_sets(inst, root_graph_);
    entry_edges_.reserve(catalog_.entries.size());
    for (const auto& entry : catalog_.entries) {
        std::vector<ConflictEdge> edges;
        edges.reserve(entry.edge_indices.size());
        for (int e : entry.edge_indices) edges.push_back(root_graph_.edges[e]);
        entry_edges_.push_back(std::move(edges));
    }
    fd_forbidden_.reserve(sigma_.size());
    for (const FD& fd : sigma_.fds) fd_forbidden_.push_back(fd.lhs.with(fd.rhs));
}

std::vector<ExtensionVector> SearchSpace::children(const ExtensionVector& s) const {
    const int m = inst_->attr_count();
    const int z = sigma_.size();
    AttrSet all_union;
    for (const AttrSet& y : s) all_union = all_union.unite(y);
    const int max_attr = all_union.max_attr(); // -1 when empty

    std::vector<ExtensionVector> out;
    for (int b = std::max(max_attr, 0); b < m; ++b) {
        int last_holding = -1;
        if (b == max_attr)
            for (int j = 0; j < z; ++j)
                if (s[j].contains(b)) last_holding = j;
        for (int j = 0; j < z; ++j) {
            if (s[j].contains(b)) continue;
            if (fd_forbidden_[j].contains(b)) continue;
            if (b == max_attr && j < last_holding) continue;
            ExtensionVector child = s;
            child[j] = child[j].with(b);
            out.push_back(std::move(child));
        }
    }
    return out;
}

ExtensionVector SearchSpace::parent(const ExtensionVector& s) const {
    AttrSet all_union;
    for (const AttrSet& y : s) all_union = all_union.unite(y);
    int a = all_union.max_attr();
    if (a < 0) throw std::runtime_error("root state has no parent");
    int j = -1;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i].contains(a)) j = i;
    ExtensionVector p = s;
    p[j] = p[j].without(a);
    return p;
}

const SearchSpace::GoalInfo& SearchSpace::goal_info(const ExtensionVector& s) {
    auto key = ext_key(s);
    auto it = goal_cache_.find(key);
    if (it != goal_cache_.end()) return it->second;
    FDSet sp = apply_extension(sigma_, s);
    ConflictGraph g = build_conflict_graph(*inst_, sp);
    VertexCover cover = greedy_vertex_cover(g);
    GoalInfo info;
    info.cover_size = cover.size();
    info.delta_p = static_cast<std::int64_t>(alpha_) * cover.size();
    return goal_cache_.emplace(std::move(key), info).first->second;
}

bool SearchSpace::entry_violated(const ExtensionVector& s, const AttrSet& d) const {
    for (int i = 0; i < sigma_.size(); ++i) {
        AttrSet lhs = sigma_[i].lhs.unite(s[i]);
        if (!lhs.intersects(d) && d.contains(sigma_[i].rhs)) return true;
    }
    return false;
}

std::vector<int> SearchSpace::violated_entries(const ExtensionVector& s) const {
    std::vector<int> out;
    for (std::size_t e = 0; e < catalog_.entries.size(); ++e)
        if (entry_violated(s, catalog_.entries[e].diffset)) out.push_back(static_cast<int>(e));
    return out;
}

namespace {

// (count desc, canonical attr-set order) over catalog entry indices.
std::vector<int> order_by_frequency(const DifferenceCatalog& cat, const std::vector<int>& idx) {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        std::size_t ca = cat.entries[a].edge_indices.size();
        std::size_t cb = cat.entries[b].edge_indices.size();
        if (ca != cb) return ca > cb;
        return attrset_less(cat.entries[a].diffset, cat.entries[b].diffset);
    });
    return sorted;
}

std::vector<int> select_subset_impl(const DifferenceCatalog& cat, const std::vector<int>& idx,
                                    int k) {
    std::vector<int> sorted = order_by_frequency(cat, idx);
    std::vector<bool> chosen(sorted.size(), false);
    int taken = 0;
    for (std::size_t i = 0; i < sorted.size() && taken < k; ++i) {
        const AttrSet& cand = cat.entries[sorted[i]].diffset;
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j) {
            if (!chosen[j]) continue;
            const AttrSet& prev = cat.entries[sorted[j]].diffset;
            int overlap = cand.intersect(prev).size();
            int smaller = std::min(cand.size(), prev.size());
            if (2 * overlap > smaller) {
                ok = false;
                break;
            }
        }
        if (ok) {
            chosen[i] = true;
            ++taken;
        }
    }
    // fill remaining slots by edge count
    for (std::size_t i = 0; i < sorted.size() && taken < k; ++i) {
        if (chosen[i]) continue;
        chosen[i] = true;
        ++taken;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (chosen[i]) out.push_back(sorted[i]);
    return out;
}

} // namespace

std::vector<int> SearchSpace::select_subset(const std::vector<int>& violated) const {
    return select_subset_impl(catalog_, violated, heuristic_k_);
}

std::vector<AttrSet> select_diffset_subset(const DifferenceCatalog& catalog, int k) {
    if (k < 1) throw std::runtime_error("select_diffset_subset: k must be >= 1");
    std::vector<int> idx(catalog.entries.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<int> sel = select_subset_impl(catalog, idx, k);
    std::vector<AttrSet> out;
    out.reserve(sel.size());
    for (int e : sel) out.push_back(catalog.entries[e].diffset);
    return out;
}

std::vector<ExtensionVector> SearchSpace::desc_goal_states(const ExtensionVector& S,
                                                           const ExtensionVector& Sc,
                                                           const std::vector<ConflictEdge>& unresolved,
                                                           const std::vector<int>& dc,
                                                           std::int64_t tau) const {
    std::vector<ExtensionVector> states;
    if (dc.empty()) {
        states.push_back(Sc);
        return states;
    }
    const int d_idx = dc.front();
    const AttrSet d = catalog_.entries[d_idx].diffset;
    const std::vector<int> rest(dc.begin() + 1, dc.end());

    // (a) leave d unresolved, if the accumulated edges stay coverable within
    // the budget
    std::vector<ConflictEdge> merged = merge_edges(unresolved, entry_edges_[d_idx]);
    if (may_leave_unresolved(merged, alpha_, tau)) {
        auto sub = desc_goal_states(S, Sc, merged, rest, tau);
        states.insert(states.end(), sub.begin(), sub.end());
    }

    // (b) resolve d: add one attribute of d (minus the RHS) to every FD that
    // d still violates, in all combinations.
    std::vector<int> violated;
    for (int i = 0; i < sigma_.size(); ++i) {
        AttrSet lhs = sigma_[i].lhs.unite(Sc[i]);
        if (!lhs.intersects(d) && d.contains(sigma_[i].rhs)) violated.push_back(i);
    }
    if (!violated.empty()) {
        std::vector<std::vector<int>> choices;
        bool feasible = true;
        for (int i : violated) {
            AttrSet cand = d.without(sigma_[i].rhs);
            if (cand.empty()) {
                feasible = false;
                break;
            }
            choices.push_back(cand.attrs());
        }
        if (feasible) {
            std::vector<std::size_t> pick(choices.size(), 0);
            while (true) {
                ExtensionVector sc2 = Sc;
                for (std::size_t c = 0; c < choices.size(); ++c)
                    sc2[violated[c]] = sc2[violated[c]].with(choices[c][pick[c]]);
                std::vector<int> dc2;
                for (int e : rest)
                    if (entry_violated(sc2, catalog_.entries[e].diffset)) dc2.push_back(e);
                auto sub = desc_goal_states(S, sc2, unresolved, dc2, tau);
                states.insert(states.end(), sub.begin(), sub.end());
                // advance the mixed-radix counter
                std::size_t c = 0;
                while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
                if (c == pick.size()) break;
            }
        }
    }

    // keep only minimal states
    std::sort(states.begin(), states.end(), [](const ExtensionVector& a, const ExtensionVector& b) {
        int na = extension_attr_count(a), nb = extension_attr_count(b);
        if (na != nb) return na < nb;
        return extension_cmp(a, b) < 0;
    });
    std::vector<ExtensionVector> minimal;
    for (const auto& s : states) {
        bool dominated = false;
        for (const auto& kept : minimal)
            if (extension_covers(s, kept)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(s);
    }
    return minimal;
}

std::int64_t SearchSpace::compute_gc(const ExtensionVector& s, std::int64_t tau) {
    std::vector<int> violated = violated_entries(s);
    std::vector<int> ds = select_subset(violated);
    std::vector<ExtensionVector> states = desc_goal_states(s, s, {}, ds, tau);
    std::int64_t best = kInfCost;
    for (const auto& st : states) best = std::min(best, cost(st));
    return best;
}

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

SearchOutcome run_search(SearchSpace& space, std::int64_t tau, bool use_gc) {
    if (tau < 0) throw std::runtime_error("tau must be non-negative");
    auto t0 = std::chrono::steady_clock::now();
    SearchOutcome out;

    auto gc_of = [&](const ExtensionVector& s) -> std::int64_t {
        return use_gc ? space.compute_gc(s, tau) : 0;
    };

    std::set<PqEntry, PqLess> open;
    ExtensionVector root = empty_extension(space.sigma().size());
    open.insert({gc_of(root), space.cost(root), 0, root});

    while (!open.empty()) {
        PqEntry top = *open.begin();
        open.erase(open.begin());
        ++out.stats.visited;
        const auto& info = space.goal_info(top.ext);
        if (info.delta_p <= tau) {
            out.found = true;
            out.extension = top.ext;
            out.cost = top.cost;
            out.delta_p = info.delta_p;
            out.cover_size = info.cover_size;
            break;
        }
        ++out.stats.expanded;
        for (auto& child : space.children(top.ext)) {
            std::int64_t gc = gc_of(child);
            if (gc == kInfCost) continue;
            std::int64_t c = space.cost(child);
            int attrs = extension_attr_count(child);
            open.insert({gc, c, attrs, std::move(child)});
        }
    }
    out.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace

SearchOutcome modify_fds_astar(SearchSpace& space, std::int64_t tau) {
    return run_search(space, tau, true);
}

SearchOutcome modify_fds_astar(const VInstance& inst, const FDSet& sigma, std::int64_t tau,
                               const Weighter& weighter, int heuristic_k) {
    SearchSpace space(inst, sigma, weighter, heuristic_k);
    return modify_fds_astar(space, tau);
}

SearchOutcome modify_fds_bestfirst(SearchSpace& space, std::int64_t tau) {
    return run_search(space, tau, false);
}

SearchOutcome modify_fds_bestfirst(const VInstance& inst, const FDSet& sigma, std::int64_t tau,
                                   const Weighter& weighter) {
    SearchSpace space(inst, sigma, weighter, 3);
    return modify_fds_bestfirst(space, tau);
}

} // namespace fdrepair
