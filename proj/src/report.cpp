#include "fdrepair/report.hpp"

#include <cstdio>

#include "fdrepair/csv.hpp"

namespace fdrepair {

namespace {

ordered_json attr_names(const AttrSet& s, const Schema& schema) {
    ordered_json arr = ordered_json::array();
    for (int a : s.attrs()) arr.push_back(schema.name(a));
    return arr;
}

ordered_json edits_json(const CellDelta& edits, const Schema& schema) {
    ordered_json arr = ordered_json::array();
    for (const CellEdit& e : edits.entries) {
        ordered_json o;
        o["tuple"] = e.tuple_id;
        o["attr"] = schema.name(e.attr);
        o["old"] = format_cell(e.old_value, schema);
        o["new"] = format_cell(e.new_value, schema);
        arr.push_back(std::move(o));
    }
    return arr;
}

ordered_json echo_json(const RunEcho& echo) {
    ordered_json c;
    c["tau"] = echo.tau;
    if (echo.tau_rel) c["tau_rel"] = *echo.tau_rel;
    else c["tau_rel"] = nullptr;
    c["weight"] = echo.weight;
    c["heuristic_k"] = echo.heuristic_k;
    c["seed"] = echo.seed;
    return c;
}

} // namespace

ordered_json repair_report(const RepairResult& r, const Schema& schema, const RunEcho& echo) {
    ordered_json j;
    j["command"] = "repair";
    j["config"] = echo_json(echo);
    j["found"] = r.found;
    if (!r.found) {
        j["reason"] = r.reason;
        ordered_json s;
        s["visited"] = r.stats.visited;
        s["expanded"] = r.stats.expanded;
        j["search"] = std::move(s);
        return j;
    }
    ordered_json sig = ordered_json::array();
    for (const FD& fd : r.sigma_prime.fds) sig.push_back(format_fd(fd, schema));
    j["sigma_prime"] = std::move(sig);
    ordered_json ext = ordered_json::array();
    for (const AttrSet& y : r.extension) ext.push_back(attr_names(y, schema));
    j["extensions"] = std::move(ext);
    j["dist_c"] = r.dist_c;
    j["dist_d"] = r.dist_d;
    j["delta_p"] = r.delta_p;
    j["cover_size"] = r.cover_size;
    j["cell_edits"] = edits_json(r.edits, schema);
    ordered_json s;
    s["visited"] = r.stats.visited;
    s["expanded"] = r.stats.expanded;
    j["search"] = std::move(s);
    return j;
}

ordered_json frontier_report(const RepairFrontier& f, const Schema& schema, std::int64_t tau_min,
                             std::int64_t tau_max, const std::string& weight, int heuristic_k,
                             std::uint64_t seed) {
    ordered_json j;
    j["command"] = "repair-range";
    ordered_json c;
    c["tau_min"] = tau_min;
    c["tau_max"] = tau_max;
    c["weight"] = weight;
    c["heuristic_k"] = heuristic_k;
    c["seed"] = seed;
    j["config"] = std::move(c);
    j["delta_p_sigma"] = f.delta_p_sigma;
    ordered_json entries = ordered_json::array();
    for (const FrontierEntry& e : f.entries) {
        ordered_json o;
        o["tau_range"] = ordered_json::array({e.tau_lo, e.tau_hi});
        if (f.delta_p_sigma > 0) {
            double lo = static_cast<double>(e.tau_lo) / static_cast<double>(f.delta_p_sigma);
            double hi = static_cast<double>(e.tau_hi) / static_cast<double>(f.delta_p_sigma);
            o["tau_rel_range"] = ordered_json::array({lo, hi});
        } else {
            o["tau_rel_range"] = nullptr;
        }
        RunEcho echo;
        echo.tau = e.tau_hi;
        echo.weight = weight;
        echo.heuristic_k = heuristic_k;
        echo.seed = seed;
        o["report"] = repair_report(e.repair, schema, echo);
        entries.push_back(std::move(o));
    }
    j["entries"] = std::move(entries);
    ordered_json s;
    s["visited"] = f.sweep_totals.visited;
    s["expanded"] = f.sweep_totals.expanded;
    j["sweep"] = std::move(s);
    return j;
}

ordered_json scores_report(const QualityScores& s) {
    ordered_json j;
    j["command"] = "score";
    j["data_precision"] = s.data_precision;
    j["data_recall"] = s.data_recall;
    j["data_f"] = s.data_f;
    j["fd_precision"] = s.fd_precision;
    j["fd_recall"] = s.fd_recall;
    j["fd_f"] = s.fd_f;
    j["combined_f"] = s.combined_f;
    return j;
}

std::string scores_table(const QualityScores& s) {
    char buf[256];
    std::string out;
    out += "metric        data      fd\n";
    std::snprintf(buf, sizeof(buf), "precision  %7.4f %7.4f\n", s.data_precision, s.fd_precision);
    out += buf;
    std::snprintf(buf, sizeof(buf), "recall     %7.4f %7.4f\n", s.data_recall, s.fd_recall);
    out += buf;
    std::snprintf(buf, sizeof(buf), "f_score    %7.4f %7.4f\n", s.data_f, s.fd_f);
    out += buf;
    std::snprintf(buf, sizeof(buf), "combined_f %7.4f\n", s.combined_f);
    out += buf;
    return out;
}

ordered_json inject_report(const InjectionResult& data, const FdPerturbation& fds,
                           const Schema& schema, double data_rate, double fd_rate,
                           std::uint64_t seed) {
    ordered_json j;
    j["command"] = "inject";
    ordered_json c;
    c["data_error_rate"] = data_rate;
    c["fd_error_rate"] = fd_rate;
    c["seed"] = seed;
    j["config"] = std::move(c);
    j["injected_count"] = static_cast<int>(data.injected.entries.size());
    j["shortfall"] = data.shortfall;
    j["injected_cells"] = edits_json(data.injected, schema);
    ordered_json rem = ordered_json::array();
    for (const AttrSet& y : fds.removed) rem.push_back(attr_names(y, schema));
    j["removed_attrs"] = std::move(rem);
    return j;
}

ordered_json graph_report(const ConflictGraph& g, const DifferenceCatalog& cat,
                          const Schema& schema) {
    ordered_json j;
    j["command"] = "graph";
    j["vertices"] = g.vertex_count;
    ordered_json edges = ordered_json::array();
    for (const ConflictEdge& e : g.edges) {
        ordered_json o;
        o["u"] = e.u;
        o["v"] = e.v;
        ordered_json fds = ordered_json::array();
        for (int i = 0; i < 64; ++i)
            if ((e.fd_mask >> i) & 1) fds.push_back(i);
        o["fds"] = std::move(fds);
        edges.push_back(std::move(o));
    }
    j["edges"] = std::move(edges);
    ordered_json sets = ordered_json::array();
    for (const DifferenceEntry& d : cat.entries) {
        ordered_json o;
        o["attrs"] = attr_names(d.diffset, schema);
        o["edge_count"] = static_cast<int>(d.edge_indices.size());
        o["edges"] = d.edge_indices;
        sets.push_back(std::move(o));
    }
    j["difference_sets"] = std::move(sets);
    return j;
}

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace fdrepair
