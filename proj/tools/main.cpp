#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fdrepair/csv.hpp"
#include "fdrepair/eval.hpp"
#include "fdrepair/multi.hpp"
#include "fdrepair/report.hpp"
#include "fdrepair/search.hpp"

namespace {

using namespace fdrepair;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitEmptyResult = 2;

struct IoOptions {
    std::string data_path;
    std::string fds_path;
    bool no_header = false;
    std::string delimiter = ",";
    std::string out_path; // empty = stdout
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool needs_fds = true) {
    cmd->add_option("--data", io.data_path, "input data CSV")->required();
    if (needs_fds) cmd->add_option("--fds", io.fds_path, "FD file, one 'A,B -> C' per line")->required();
    cmd->add_flag("--no-header", io.no_header, "CSV has no header row");
    cmd->add_option("--delimiter", io.delimiter, "CSV delimiter (single character)");
    cmd->add_option("--out", io.out_path, "write the report here instead of stdout");
}

CsvOptions csv_options(const IoOptions& io) {
    if (io.delimiter.size() != 1)
        throw std::runtime_error("--delimiter must be a single character");
    return CsvOptions{!io.no_header, io.delimiter[0]};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << text;
}

std::string repair_table(const RepairResult& r, const Schema& schema) {
    std::ostringstream out;
    out << "found: " << (r.found ? "yes" : "no") << "\n";
    if (!r.found) {
        out << "reason: " << r.reason << "\n";
        return out.str();
    }
    out << "dist_c: " << r.dist_c << "\n";
    out << "dist_d: " << r.dist_d << "\n";
    out << "delta_p: " << r.delta_p << "\n";
    out << "cover_size: " << r.cover_size << "\n";
    out << "sigma_prime:\n";
    for (const FD& fd : r.sigma_prime.fds) out << "  " << format_fd(fd, schema) << "\n";
    out << "cell_edits: " << r.edits.count() << "\n";
    return out.str();
}

struct RepairArgs {
    IoOptions io;
    std::optional<std::int64_t> tau;
    std::optional<double> tau_rel;
    std::string weight = "count";
    int heuristic_k = 3;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_data;
    std::string out_fds;
};

int run_repair(const RepairArgs& a) {
    CsvOptions copts = csv_options(a.io);
    VInstance inst = load_csv_file(a.io.data_path, copts);
    FDSet sigma = parse_fds(read_file(a.io.fds_path), inst.schema());
    Weighter weighter(parse_weight_kind(a.weight), &inst);

    if (a.tau.has_value() == a.tau_rel.has_value())
        throw std::runtime_error("exactly one of --tau / --tau-rel is required");
    std::int64_t tau = a.tau ? *a.tau : tau_from_relative(*a.tau_rel, sigma, inst);
    if (tau < 0) throw std::runtime_error("--tau must be non-negative");

    RepairResult r = repair_data_fds(sigma, inst, tau, weighter, a.heuristic_k, a.seed);
    std::cerr << "search: " << r.stats.visited << " visited, " << r.stats.expanded
              << " expanded, " << r.stats.wall_ms << " ms\n";

    RunEcho echo{tau, a.tau_rel, a.weight, a.heuristic_k, a.seed};
    if (a.format == "table")
        emit(repair_table(r, inst.schema()), a.io.out_path);
    else
        emit(render_json(repair_report(r, inst.schema(), echo)), a.io.out_path);

    if (r.found && !a.out_data.empty()) write_csv_file(r.instance_prime, a.out_data, copts);
    if (r.found && !a.out_fds.empty()) {
        std::ofstream f(a.out_fds, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + a.out_fds + "' for writing");
        f << format_fds(r.sigma_prime, inst.schema());
    }
    return r.found ? kExitOk : kExitEmptyResult;
}

struct RangeArgs {
    IoOptions io;
    std::int64_t tau_min = 0;
    std::int64_t tau_max = 0;
    std::string weight = "count";
    int heuristic_k = 3;
    std::uint64_t seed = 0;
    std::string format = "json";
};

std::string frontier_table(const RepairFrontier& f, const Schema& schema) {
    std::ostringstream out;
    out << "tau_range    dist_c  dist_d  delta_p  sigma_prime\n";
    for (const FrontierEntry& e : f.entries) {
        std::string band = "[" + std::to_string(e.tau_lo) + "," + std::to_string(e.tau_hi) + "]";
        out << band << std::string(band.size() < 12 ? 12 - band.size() : 1, ' ');
        std::string nums = std::to_string(e.repair.dist_c);
        out << nums << std::string(nums.size() < 7 ? 7 - nums.size() : 1, ' ');
        nums = std::to_string(e.repair.dist_d);
        out << nums << std::string(nums.size() < 7 ? 7 - nums.size() : 1, ' ');
        nums = std::to_string(e.repair.delta_p);
        out << nums << std::string(nums.size() < 8 ? 8 - nums.size() : 1, ' ');
        bool first = true;
        for (const FD& fd : e.repair.sigma_prime.fds) {
            if (!first) out << "; ";
            out << format_fd(fd, schema);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

int run_repair_range(const RangeArgs& a) {
    CsvOptions copts = csv_options(a.io);
    VInstance inst = load_csv_file(a.io.data_path, copts);
    FDSet sigma = parse_fds(read_file(a.io.fds_path), inst.schema());
    Weighter weighter(parse_weight_kind(a.weight), &inst);

    SearchSpace space(inst, sigma, weighter, a.heuristic_k);
    SweepResult sweep = find_repairs_fds(space, a.tau_min, a.tau_max);
    RepairFrontier frontier = materialize_frontier(space, sweep, a.tau_max, a.seed);
    std::cerr << "sweep: " << sweep.totals.visited << " visited, " << sweep.totals.expanded
              << " expanded\n";

    if (a.format == "table")
        emit(frontier_table(frontier, inst.schema()), a.io.out_path);
    else
        emit(render_json(frontier_report(frontier, inst.schema(), a.tau_min, a.tau_max, a.weight,
                                         a.heuristic_k, a.seed)),
             a.io.out_path);
    return frontier.entries.empty() ? kExitEmptyResult : kExitOk;
}

struct InjectArgs {
    IoOptions io;
    double data_error_rate = 0.0;
    double fd_error_rate = 0.0;
    std::uint64_t seed = 0;
    std::string out_data;
    std::string out_fds;
    std::string out_truth;
};

int run_inject(const InjectArgs& a) {
    CsvOptions copts = csv_options(a.io);
    VInstance clean = load_csv_file(a.io.data_path, copts);
    FDSet sigma = parse_fds(read_file(a.io.fds_path), clean.schema());

    FdPerturbation fds = perturb_fds(sigma, a.fd_error_rate, a.seed, clean.schema());
    InjectionResult data = perturb_data(clean, sigma, a.data_error_rate, a.seed);

    if (!a.out_data.empty()) write_csv_file(data.dirty, a.out_data, copts);
    if (!a.out_fds.empty()) {
        std::ofstream f(a.out_fds, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + a.out_fds + "' for writing");
        f << format_fds(fds.dirty, clean.schema());
    }
    ordered_json truth = inject_report(data, fds, clean.schema(), a.data_error_rate,
                                       a.fd_error_rate, a.seed);
    if (!a.out_truth.empty()) emit(render_json(truth), a.out_truth);
    emit(render_json(truth), a.io.out_path);
    return kExitOk;
}

struct ScoreArgs {
    std::string clean_data, dirty_data, repaired_data;
    std::string clean_fds, dirty_fds, repaired_fds;
    bool no_header = false;
    std::string delimiter = ",";
    std::string out_path;
    std::string format = "json";
};

int run_score(const ScoreArgs& a) {
    if (a.delimiter.size() != 1)
        throw std::runtime_error("--delimiter must be a single character");
    CsvOptions copts{!a.no_header, a.delimiter[0]};
    VInstance clean = load_csv_file(a.clean_data, copts);
    VInstance dirty = load_csv_file(a.dirty_data, copts);
    VInstance repaired = load_vcsv_file(a.repaired_data, copts);
    FDSet sc = parse_fds(read_file(a.clean_fds), clean.schema());
    FDSet sd = parse_fds(read_file(a.dirty_fds), clean.schema());
    FDSet sr = parse_fds(read_file(a.repaired_fds), clean.schema());

    QualityScores s = score_repair(clean, dirty, repaired, sc, sd, sr);
    if (a.format == "table")
        emit(scores_table(s), a.out_path);
    else
        emit(render_json(scores_report(s)), a.out_path);
    return kExitOk;
}

int run_graph(const IoOptions& io) {
    CsvOptions copts = csv_options(io);
    VInstance inst = load_csv_file(io.data_path, copts);
    FDSet sigma = parse_fds(read_file(io.fds_path), inst.schema());
    ConflictGraph g = build_conflict_graph(inst, sigma);
    DifferenceCatalog cat = difference_sets(inst, g);
    emit(render_json(graph_report(g, cat, inst.schema())), io.out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint repair of functional dependencies and data under a relative-trust budget"};
    app.require_subcommand(1);

    RepairArgs repair_args;
    auto* repair = app.add_subcommand("repair", "compute one repair for a given tau");
    add_io_options(repair, repair_args.io);
    std::int64_t tau_opt = 0;
    double tau_rel_opt = 0;
    auto* tau_flag = repair->add_option("--tau", tau_opt, "max number of cell changes");
    auto* tau_rel_flag =
        repair->add_option("--tau-rel", tau_rel_opt, "cell-change budget relative to delta_p");
    repair->add_option("--weight", repair_args.weight, "weighting: count | distinct");
    repair->add_option("--heuristic-k", repair_args.heuristic_k, "difference sets used by gc");
    repair->add_option("--seed", repair_args.seed, "seed for the data-repair step");
    repair->add_option("--format", repair_args.format, "json | table");
    repair->add_option("--out-data", repair_args.out_data, "write the repaired instance CSV");
    repair->add_option("--out-fds", repair_args.out_fds, "write the repaired FD file");

    RangeArgs range_args;
    auto* range = app.add_subcommand("repair-range", "enumerate repairs across a tau range");
    add_io_options(range, range_args.io);
    range->add_option("--tau-min", range_args.tau_min, "lower end of the tau range")->required();
    range->add_option("--tau-max", range_args.tau_max, "upper end of the tau range")->required();
    range->add_option("--weight", range_args.weight, "weighting: count | distinct");
    range->add_option("--heuristic-k", range_args.heuristic_k, "difference sets used by gc");
    range->add_option("--seed", range_args.seed, "seed for the data-repair step");
    range->add_option("--format", range_args.format, "json | table");

    InjectArgs inject_args;
    auto* inject = app.add_subcommand("inject", "perturb a clean instance and FD set");
    add_io_options(inject, inject_args.io);
    inject->add_option("--data-error-rate", inject_args.data_error_rate, "fraction of cells");
    inject->add_option("--fd-error-rate", inject_args.fd_error_rate, "fraction of LHS attributes");
    inject->add_option("--seed", inject_args.seed, "injection seed");
    inject->add_option("--out-data", inject_args.out_data, "write the dirty instance CSV");
    inject->add_option("--out-fds", inject_args.out_fds, "write the dirty FD file");
    inject->add_option("--out-truth", inject_args.out_truth, "write the ground-truth record");

    ScoreArgs score_args;
    auto* score = app.add_subcommand("score", "score a repair against the clean originals");
    score->add_option("--clean-data", score_args.clean_data)->required();
    score->add_option("--dirty-data", score_args.dirty_data)->required();
    score->add_option("--repaired-data", score_args.repaired_data)->required();
    score->add_option("--clean-fds", score_args.clean_fds)->required();
    score->add_option("--dirty-fds", score_args.dirty_fds)->required();
    score->add_option("--repaired-fds", score_args.repaired_fds)->required();
    score->add_flag("--no-header", score_args.no_header, "CSVs have no header row");
    score->add_option("--delimiter", score_args.delimiter, "CSV delimiter");
    score->add_option("--out", score_args.out_path, "write scores here instead of stdout");
    score->add_option("--format", score_args.format, "json | table");

    IoOptions graph_io;
    auto* graph = app.add_subcommand("graph", "dump the conflict graph and difference sets");
    add_io_options(graph, graph_io);

    CLI11_PARSE(app, argc, argv);

    try {
        if (repair->parsed()) {
            if (tau_flag->count()) repair_args.tau = tau_opt;
            if (tau_rel_flag->count()) repair_args.tau_rel = tau_rel_opt;
            return run_repair(repair_args);
        }
        if (range->parsed()) return run_repair_range(range_args);
        if (inject->parsed()) return run_inject(inject_args);
        if (score->parsed()) return run_score(score_args);
        if (graph->parsed()) return run_graph(graph_io);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
