#include "fdrepair/conflict.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdrepair {

namespace {

struct PairRec {
    int u;
    int v;
    std::uint64_t fd_bit;
};

bool pair_less(const PairRec& a, const PairRec& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.fd_bit < b.fd_bit;
}

// One LHS group that produces edges: members split into RHS sub-groups.
struct GroupWork {
    std::uint64_t fd_bit;
    std::vector<std::vector<int>> subgroups;
    std::size_t cross_pairs;
};

ConflictGraph finish(int n, std::vector<PairRec> recs) {
    std::sort(recs.begin(), recs.end(), pair_less);
    ConflictGraph g;
    g.vertex_count = n;
    for (std::size_t i = 0; i < recs.size();) {
        ConflictEdge e{recs[i].u, recs[i].v, 0};
        while (i < recs.size() && recs[i].u == e.u && recs[i].v == e.v) {
            e.fd_mask |= recs[i].fd_bit;
            ++i;
        }
        g.edges.push_back(e);
    }
    return g;
}

} // namespace

ConflictGraph build_conflict_graph(const VInstance& inst, const FDSet& sigma) {
    const int n = inst.tuple_count();
    const AttrSet all = inst.schema().all();
    for (const FD& fd : sigma.fds)
        if (!fd.lhs.subset_of(all) || fd.rhs < 0 || fd.rhs >= inst.attr_count())
            throw std::runtime_error("schema error: FD references unknown attribute");

    std::vector<GroupWork> work;
    for (int fi = 0; fi < sigma.size(); ++fi) {
        const FD& fd = sigma[fi];
        std::unordered_map<std::string, std::vector<int>> groups;
        groups.reserve(static_cast<std::size_t>(n) * 2);
        for (int t = 0; t < n; ++t) {
            std::string key;
            for (int a : fd.lhs.attrs()) {
                key += cell_key(inst.cell(t, a));
                key += '\x1f';
            }
            groups[key].push_back(t);
        }
        for (auto& [key, members] : groups) {
            if (members.size() < 2) continue;
            std::unordered_map<std::string, int> sub_ids;
            std::vector<std::vector<int>> subs;
            for (int t : members) {
                std::string rkey = cell_key(inst.cell(t, fd.rhs));
                auto [it, fresh] = sub_ids.emplace(rkey, static_cast<int>(subs.size()));
                if (fresh) subs.emplace_back();
                subs[it->second].push_back(t);
            }
            if (subs.size() < 2) continue;
            std::size_t total = members.size(), same = 0;
            for (const auto& s : subs) same += s.size() * s.size();
            GroupWork gw;
            gw.fd_bit = std::uint64_t{1} << fi;
            gw.cross_pairs = (total * total - same) / 2;
            gw.subgroups = std::move(subs);
            work.push_back(std::move(gw));
        }
    }

    std::vector<PairRec> recs;
#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::vector<std::vector<PairRec>> local(nthreads);

#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::size_t w = 0; w < work.size(); ++w) {
#ifdef _OPENMP
        auto& buf = local[omp_get_thread_num()];
#else
        auto& buf = local[0];
#endif
        const GroupWork& gw = work[w];
        for (std::size_t i = 0; i < gw.subgroups.size(); ++i)
            for (std::size_t j = i + 1; j < gw.subgroups.size(); ++j)
                for (int a : gw.subgroups[i])
                    for (int b : gw.subgroups[j])
                        buf.push_back({std::min(a, b), std::max(a, b), gw.fd_bit});
    }
    std::size_t total = 0;
    for (const auto& buf : local) total += buf.size();
    recs.reserve(total);
    for (auto& buf : local) recs.insert(recs.end(), buf.begin(), buf.end());
    return finish(n, std::move(recs));
}

ConflictGraph build_conflict_graph_reference(const VInstance& inst, const FDSet& sigma) {
    const int n = inst.tuple_count();
    ConflictGraph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t mask = 0;
            for (int fi = 0; fi < sigma.size(); ++fi) {
                const FD& fd = sigma[fi];
                bool lhs_eq = true;
                for (int a : fd.lhs.attrs())
                    if (!cells_equal(inst.cell(i, a), inst.cell(j, a))) {
                        lhs_eq = false;
                        break;
                    }
                if (lhs_eq && !cells_equal(inst.cell(i, fd.rhs), inst.cell(j, fd.rhs)))
                    mask |= std::uint64_t{1} << fi;
            }
            if (mask) g.edges.push_back({i, j, mask});
        }
    }
    return g;
}

AttrSet pair_diffset(const VInstance& inst, int t1, int t2) {
    AttrSet d;
    for (int a = 0; a < inst.attr_count(); ++a)
        if (!cells_equal(inst.cell(t1, a), inst.cell(t2, a))) d = d.with(a);
    return d;
}

const DifferenceEntry* DifferenceCatalog::find(const AttrSet& d) const {
    for (const auto& e : entries)
        if (e.diffset == d) return &e;
    return nullptr;
}

DifferenceCatalog difference_sets(const VInstance& inst, const ConflictGraph& graph) {
    const std::size_t m = graph.edges.size();
    std::vector<std::uint64_t> masks(m);
#pragma omp parallel for schedule(static)
    for (std::size_t e = 0; e < m; ++e)
        masks[e] = pair_diffset(inst, graph.edges[e].u, graph.edges[e].v).mask();

    std::unordered_map<std::uint64_t, std::vector<int>> by_set;
    for (std::size_t e = 0; e < m; ++e) by_set[masks[e]].push_back(static_cast<int>(e));

    DifferenceCatalog cat;
    cat.entries.reserve(by_set.size());
    for (auto& [mask, idx] : by_set) cat.entries.push_back({AttrSet(mask), std::move(idx)});
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const DifferenceEntry& a, const DifferenceEntry& b) {
                  return attrset_less(a.diffset, b.diffset);
              });
    return cat;
}

DifferenceCatalog difference_sets_reference(const VInstance& inst, const ConflictGraph& graph) {
    DifferenceCatalog cat;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        AttrSet d = pair_diffset(inst, graph.edges[e].u, graph.edges[e].v);
        bool found = false;
        for (auto& entry : cat.entries)
            if (entry.diffset == d) {
                entry.edge_indices.push_back(static_cast<int>(e));
                found = true;
                break;
            }
        if (!found) cat.entries.push_back({d, {static_cast<int>(e)}});
    }
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const DifferenceEntry& a, const DifferenceEntry& b) {
                  return attrset_less(a.diffset, b.diffset);
              });
    return cat;
}

bool diffset_violates(const AttrSet& d, const FD& fd) {
    return !fd.lhs.intersects(d) && d.contains(fd.rhs);
}

std::uint64_t diffset_violation_mask(const AttrSet& d, const FDSet& sigma) {
    std::uint64_t mask = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (diffset_violates(d, sigma[i])) mask |= std::uint64_t{1} << i;
    return mask;
}

VertexCover greedy_vertex_cover(const std::vector<ConflictEdge>& sorted_edges) {
    int max_vertex = -1;
    for (const ConflictEdge& e : sorted_edges) max_vertex = std::max(max_vertex, e.v);
    std::vector<char> in_cover(max_vertex + 1, 0);
    std::vector<int> picked;
    for (const ConflictEdge& e : sorted_edges) {
        if (in_cover[e.u] || in_cover[e.v]) continue;
        in_cover[e.u] = 1;
        in_cover[e.v] = 1;
        picked.push_back(e.u);
        picked.push_back(e.v);
    }
    std::sort(picked.begin(), picked.end());
    return VertexCover{std::move(picked)};
}

VertexCover greedy_vertex_cover(const ConflictGraph& graph) {
    return greedy_vertex_cover(graph.edges);
}

int repair_alpha(const Schema& schema, int fd_count) {
    return std::min(schema.size() - 1, fd_count);
}

DeltaP delta_p(const VInstance& inst, const FDSet& sigma_prime) {
    DeltaP out;
    out.graph = build_conflict_graph(inst, sigma_prime);
    out.cover = greedy_vertex_cover(out.graph);
    out.value = static_cast<std::int64_t>(repair_alpha(inst.schema(), sigma_prime.size())) *
                out.cover.size();
    return out;
}

} // namespace fdrepair
