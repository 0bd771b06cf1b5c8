// Acceptance suite: one self-contained check per numbered criterion, one
// PASS/FAIL line each.  Run with no arguments for all criteria or with a
// single number to run one.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fdrepair/csv.hpp"
#include "fdrepair/eval.hpp"
#include "fdrepair/multi.hpp"
#include "fdrepair/report.hpp"
#include "fdrepair/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fdrepair;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
    o.pass = false;
    if (o.detail.empty()) o.detail = msg;
}

// ---------------------------------------------------------------- C1 + C2
// Satisfaction and the Theorem-3 change bound over randomized fixtures.
Outcome run_c1_c2(bool check_bound) {
    Outcome o;
    Rng rng(1001);
    int fixtures = 0;
    while (fixtures < 220) {
        int n = 5 + static_cast<int>(rng.bounded(46));
        int m = 3 + static_cast<int>(rng.bounded(4));
        int z = 1 + static_cast<int>(rng.bounded(3));
        VInstance inst = fixtures::random_instance(rng, n, m, 2 + rng.bounded(2));
        FDSet sigma = fixtures::random_sigma(rng, inst.schema(), z);
        ++fixtures;

        VertexCover cover = greedy_vertex_cover(build_conflict_graph(inst, sigma));
        VInstance repaired = repair_data(sigma, inst, rng.next());

        if (!check_bound) {
            if (!check_satisfies(repaired, sigma.fds).satisfied)
                fail(o, "unsatisfied repair at fixture " + std::to_string(fixtures));
            if (!check_satisfies(oracle::ground(repaired), sigma.fds).satisfied)
                fail(o, "grounded repair unsatisfied at fixture " + std::to_string(fixtures));
        } else {
            int alpha = repair_alpha(inst.schema(), sigma.size());
            int changes = dist_d(inst, repaired).count();
            if (changes > cover.size() * alpha)
                fail(o, "bound violated: " + std::to_string(changes) + " > " +
                            std::to_string(cover.size() * alpha));
        }
    }
    o.detail = std::to_string(fixtures) + " fixtures";
    return o;
}

// ------------------------------------------------------------------- C3
Outcome run_c3() {
    Outcome o;
    Rng rng(1003);
    int graphs = 0;
    while (graphs < 120) {
        int n = 4 + static_cast<int>(rng.bounded(13)); // up to 16 vertices
        ConflictGraph g;
        g.vertex_count = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bounded(4) == 0) g.edges.push_back({u, v, 1});
        ++graphs;
        VertexCover cover = greedy_vertex_cover(g);
        if (!oracle::is_vertex_cover(cover.cover, g.edges)) {
            fail(o, "not a cover at graph " + std::to_string(graphs));
            continue;
        }
        int opt = oracle::min_vertex_cover_size(n, g.edges);
        if (cover.size() > 2 * opt)
            fail(o, "factor exceeded: greedy " + std::to_string(cover.size()) + " opt " +
                        std::to_string(opt));
    }
    o.detail = std::to_string(graphs) + " graphs";
    return o;
}

// -------------------------------------------------------------- C4 + C5
// Exhaustive small spaces: A* optimality per tau, and gc admissibility.
Outcome run_c4_c5(bool check_admissibility) {
    Outcome o;
    Rng rng(1004);
    int fixtures = 0, tau_points = 0;
    while (fixtures < 25) {
        int m = 3 + static_cast<int>(rng.bounded(3)); // up to 5 attributes
        int n = 4 + static_cast<int>(rng.bounded(9)); // up to 12 tuples
        int z = 1 + static_cast<int>(rng.bounded(2));
        VInstance inst = fixtures::random_instance(rng, n, m, 2);
        FDSet sigma = fixtures::random_sigma(rng, inst.schema(), z);
        ++fixtures;

        Weighter w(fixtures % 2 ? WeightKind::AttrCount : WeightKind::DistinctCount, &inst);
        SearchSpace space(inst, sigma, w, 3);
        auto all = oracle::all_extensions(inst.schema(), sigma);
        std::int64_t root_dp = space.goal_info(empty_extension(sigma.size())).delta_p;

        for (std::int64_t tau = 0; tau <= root_dp; ++tau) {
            ++tau_points;
            if (!check_admissibility) {
                std::int64_t best = kInfCost;
                for (const auto& e : all)
                    if (space.goal_info(e).delta_p <= tau) best = std::min(best, space.cost(e));
                SearchOutcome out = modify_fds_astar(space, tau);
                if (best == kInfCost) {
                    if (out.found) fail(o, "A* found a repair where none exists");
                } else if (!out.found || out.cost != best || out.delta_p > tau) {
                    fail(o, "A* suboptimal at tau " + std::to_string(tau) + ": got " +
                                (out.found ? std::to_string(out.cost) : std::string("none")) +
                                " expected " + std::to_string(best));
                }
            } else {
                for (const auto& st : all) {
                    std::int64_t gc = space.compute_gc(st, tau);
                    std::int64_t best = kInfCost;
                    for (const auto& d : oracle::tree_descendants_or_self(space, st))
                        if (space.goal_info(d).delta_p <= tau)
                            best = std::min(best, space.cost(d));
                    if (best != kInfCost && gc > best)
                        fail(o, "gc overestimates: " + std::to_string(gc) + " > " +
                                    std::to_string(best) + " at tau " + std::to_string(tau));
                    if (gc == kInfCost && best != kInfCost)
                        fail(o, "gc infinite though a goal descendant exists");
                }
            }
        }
    }
    o.detail = std::to_string(fixtures) + " spaces, " + std::to_string(tau_points) + " tau values";
    return o;
}

// ------------------------------------------------------------------- C6
Outcome run_c6() {
    Outcome o;
    Rng rng(1006);
    int checked = 0, none_seen = 0;
    while (checked < 400) {
        VInstance inst = fixtures::random_instance(rng, 4, 4, 2);
        FDSet sigma = fixtures::random_sigma(rng, inst.schema(), 1 + rng.bounded(2));
        VertexCover cover = greedy_vertex_cover(build_conflict_graph(inst, sigma));
        if (cover.cover.empty()) continue;
        std::vector<char> in_cover(inst.tuple_count(), 0);
        for (int t : cover.cover) in_cover[t] = 1;
        int tid = cover.cover[rng.bounded(cover.cover.size())];
        AttrSet fixed;
        int want = 1 + static_cast<int>(rng.bounded(4));
        while (fixed.size() < want)
            fixed = fixed.with(static_cast<int>(rng.bounded(inst.attr_count())));
        ++checked;

        VariableAllocator vars(inst);
        auto res = find_assignment(inst, tid, fixed, sigma, in_cover, vars);
        bool exists = oracle::assignment_exists(inst, tid, fixed, sigma, in_cover);
        if (!res && exists) fail(o, "find_assignment missed a valid assignment");
        if (res && !exists) fail(o, "find_assignment invented an assignment");
        if (!res) ++none_seen;
    }
    o.detail = std::to_string(checked) + " queries, " + std::to_string(none_seen) + " none";
    return o;
}

// ------------------------------------------------------------------- C7
// Figure-4 reproduction as stated: difference sets {BD, AD, BCD}, cover
// sizes verified by brute force, then the tau=2 A* result under w(Y)=|Y|.
Outcome run_c7() {
    Outcome o;
    VInstance d4 = fixtures::d4();
    const Schema& s = d4.schema();
    FDSet sigma = fixtures::sigma_ab_cd(s);

    // difference sets are exactly {BD, AD, BCD}
    ConflictGraph g = build_conflict_graph_reference(d4, sigma);
    DifferenceCatalog cat = difference_sets_reference(d4, g);
    bool sets_ok = cat.entries.size() == 3 && cat.find(fixtures::attrs_of(s, "BD")) &&
                   cat.find(fixtures::attrs_of(s, "AD")) && cat.find(fixtures::attrs_of(s, "BCD"));
    if (!sets_ok) {
        fail(o, "fixture difference sets are wrong");
        return o;
    }

    // cover sizes, brute-force-verified: the original graph (a 3-path) has
    // optimal cover 2; each candidate's residual graph (a 2-path) has
    // optimal cover 1; the deterministic greedy doubles both
    FDSet ca = parse_fds("C,A -> B\nC -> D\n", s);
    FDSet da = parse_fds("D,A -> B\nC -> D\n", s);
    ConflictGraph g_ca = build_conflict_graph_reference(d4, ca);
    ConflictGraph g_da = build_conflict_graph_reference(d4, da);
    if (oracle::min_vertex_cover_size(4, g.edges) != 2 ||
        oracle::min_vertex_cover_size(4, g_ca.edges) != 1 ||
        oracle::min_vertex_cover_size(4, g_da.edges) != 1) {
        fail(o, "brute-force cover sizes do not match the published example");
        return o;
    }
    if (greedy_vertex_cover(g).size() != 4 || greedy_vertex_cover(g_ca).size() != 2 ||
        greedy_vertex_cover(g_da).size() != 2) {
        fail(o, "greedy cover sizes changed");
        return o;
    }

    // tau = 2 under w(Y) = |Y|
    Weighter w(WeightKind::AttrCount);
    SearchOutcome out = modify_fds_astar(d4, sigma, 2, w, 3);
    ExtensionVector want_ca = {fixtures::attrs_of(s, "C"), AttrSet{}};
    ExtensionVector want_da = {fixtures::attrs_of(s, "D"), AttrSet{}};
    if (!out.found) {
        fail(o, "no repair found at tau=2");
    } else if (!(out.extension == want_ca || out.extension == want_da)) {
        std::string got;
        for (std::size_t i = 0; i < out.extension.size(); ++i)
            got += "[" + s.set_names(out.extension[i]) + "]";
        fail(o, "tau=2 returned " + got + " (dist_c " + std::to_string(out.cost) +
                    ", delta_p " + std::to_string(out.delta_p) +
                    "); the published repairs carry delta_p = alpha*|greedy cover| = 4 > 2, so "
                    "they are not goals at tau=2 under the edge-greedy bound");
    } else if (out.cost != 1) {
        fail(o, "unexpected dist_c " + std::to_string(out.cost));
    }
    return o;
}

// ------------------------------------------------------------------- C8
Outcome run_c8() {
    Outcome o;
    Rng rng(1008);
    int fixtures = 0, cheaper = 0;
    while (fixtures < 20) {
        VInstance inst = fixtures < 1 ? fixtures::d4()
                                      : fixtures::random_instance(
                                            rng, 6 + rng.bounded(7), 4, 2);
        FDSet sigma = fixtures < 1 ? fixtures::sigma_ab_cd(inst.schema())
                                   : fixtures::random_sigma(rng, inst.schema(), 2);
        ++fixtures;
        Weighter w(WeightKind::AttrCount);
        SearchSpace space(inst, sigma, w, 3);
        std::int64_t dp = space.goal_info(empty_extension(sigma.size())).delta_p;

        SweepResult sweep = find_repairs_fds(space, 0, dp);
        std::vector<std::int64_t> grid;
        for (std::int64_t t = 0; t <= dp; ++t) grid.push_back(t);
        SearchStats totals;
        auto sampled = sample_repairs(inst, sigma, grid, w, 3, 5, &totals);

        if (sweep.points.size() != sampled.size()) {
            fail(o, "entry count mismatch: sweep " + std::to_string(sweep.points.size()) +
                        " sampling " + std::to_string(sampled.size()));
            continue;
        }
        for (std::size_t i = 0; i < sampled.size(); ++i) {
            const FrontierPoint& p = sweep.points[sweep.points.size() - 1 - i];
            if (!(p.extension == sampled[i].extension) || p.delta_p != sampled[i].delta_p ||
                p.cost != sampled[i].dist_c)
                fail(o, "frontier/sampling mismatch at fixture " + std::to_string(fixtures));
        }
        if (sweep.totals.expanded <= totals.expanded) ++cheaper;
    }
    if (cheaper * 10 < fixtures * 9)
        fail(o, "sweep expanded more than sampling on " + std::to_string(fixtures - cheaper) +
                    " of " + std::to_string(fixtures) + " fixtures");
    o.detail = std::to_string(fixtures) + " fixtures, sweep cheaper on " +
               std::to_string(cheaper);
    return o;
}

// ------------------------------------------------------------------- C9
Outcome run_c9() {
    Outcome o;
    Rng rng(1009);
    int fixtures = 0, strict = 0;
    int attempts = 0;
    while (fixtures < 40 && attempts < 4000) {
        ++attempts;
        VInstance inst = fixtures::random_instance(rng, 8 + rng.bounded(7), 5 + rng.bounded(2), 2);
        FDSet sigma = fixtures::random_sigma(rng, inst.schema(), 2);
        Weighter w(WeightKind::AttrCount);
        SearchSpace space(inst, sigma, w, 3);

        // the hardest feasible budget: the smallest delta_p any state reaches
        auto all = oracle::all_extensions(inst.schema(), sigma);
        std::int64_t tau = kInfCost;
        for (const auto& e : all) tau = std::min(tau, space.goal_info(e).delta_p);
        if (tau == kInfCost) continue;
        // the optimum there must append at least two attributes
        std::int64_t best = kInfCost;
        int best_attrs = 0;
        for (const auto& e : all)
            if (space.goal_info(e).delta_p <= tau && space.cost(e) < best) {
                best = space.cost(e);
                best_attrs = extension_attr_count(e);
            }
        if (best_attrs < 2) continue;

        ++fixtures;
        SearchOutcome a = modify_fds_astar(inst, sigma, tau, w, 3);
        SearchOutcome b = modify_fds_bestfirst(inst, sigma, tau, w);
        if (!a.found || !b.found || a.cost != b.cost) {
            fail(o, "search outcomes diverge at fixture " + std::to_string(fixtures));
            continue;
        }
        if (a.stats.visited > b.stats.visited)
            fail(o, "A* visited more states than best-first (" +
                        std::to_string(a.stats.visited) + " > " +
                        std::to_string(b.stats.visited) + ")");
        if (a.stats.visited < b.stats.visited) ++strict;
    }
    if (fixtures < 40) {
        fail(o, "could not build enough fixtures");
        return o;
    }
    if (2 * strict < fixtures)
        fail(o, "strict improvement on only " + std::to_string(strict) + " of " +
                    std::to_string(fixtures));
    o.detail = std::to_string(fixtures) + " fixtures, strict improvement on " +
               std::to_string(strict);
    return o;
}

// ------------------------------------------------------------------ C10
// Desk-scale protocol trend: FD-only perturbation peaks at tau_r = 0,
// data-only at tau_r = 1.
namespace trend {

VInstance synthetic_clean(Rng& rng, int n) {
    std::vector<std::string> names = {"A", "B", "C", "D", "E", "F"};
    std::vector<Tuple> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        int a = static_cast<int>(rng.bounded(12));
        int b = static_cast<int>(rng.bounded(10));
        int c = static_cast<int>(rng.bounded(8));
        int d = (a * 31 + b * 7 + c * 3) % 97; // function of (A,B,C), so ABC -> D holds
        Tuple row;
        row.push_back(CellValue::constant(std::to_string(a)));
        row.push_back(CellValue::constant(std::to_string(b)));
        row.push_back(CellValue::constant(std::to_string(c)));
        row.push_back(CellValue::constant(std::to_string(d)));
        row.push_back(CellValue::constant(std::to_string(rng.bounded(50))));
        row.push_back(CellValue::constant(std::to_string(rng.bounded(50))));
        rows.push_back(std::move(row));
    }
    return VInstance(Schema(names), std::move(rows));
}

double combined_at(const VInstance& clean, const VInstance& dirty, const FDSet& sigma_clean,
                   const FdPerturbation& fds, double tau_r, std::uint64_t seed) {
    Weighter w(WeightKind::DistinctCount, &dirty);
    std::int64_t tau = tau_from_relative(tau_r, fds.dirty, dirty);
    RepairResult r = repair_data_fds(fds.dirty, dirty, tau, w, 3, seed);
    if (!r.found) return 0.0;
    QualityScores s =
        score_repair(clean, dirty, r.instance_prime, sigma_clean, fds.dirty, r.sigma_prime);
    return s.combined_f;
}

} // namespace trend

Outcome run_c10() {
    Outcome o;
    const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    int fd_ok = 0, data_ok = 0;
    const int seeds = 5;
    for (int seed = 1; seed <= seeds; ++seed) {
        Rng rng(9000 + seed);
        VInstance clean = trend::synthetic_clean(rng, 1200);
        FDSet sigma = parse_fds("A,B,C -> D", clean.schema());

        auto t0 = std::chrono::steady_clock::now();

        // FD-only perturbation
        {
            FdPerturbation fds = perturb_fds(sigma, 0.5, seed, clean.schema());
            std::vector<double> scores;
            for (double tr : grid)
                scores.push_back(trend::combined_at(clean, clean, sigma, fds, tr, seed));
            double best = *std::max_element(scores.begin(), scores.end());
            if (scores[0] >= best - 1e-12) ++fd_ok;
        }
        // data-only perturbation
        {
            FdPerturbation none;
            none.dirty = sigma;
            none.removed = empty_extension(sigma.size());
            InjectionResult inj = perturb_data(clean, sigma, 0.004, seed);
            std::vector<double> scores;
            for (double tr : grid)
                scores.push_back(trend::combined_at(clean, inj.dirty, sigma, none, tr, seed));
            double best = *std::max_element(scores.begin(), scores.end());
            if (scores[4] >= best - 1e-12) ++data_ok;
        }

        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 60.0)
            fail(o, "sweep for seed " + std::to_string(seed) + " took " +
                        std::to_string(secs) + "s");
    }
    if (fd_ok < 4)
        fail(o, "FD-only trend held on only " + std::to_string(fd_ok) + " of 5 seeds");
    if (data_ok < 4)
        fail(o, "data-only trend held on only " + std::to_string(data_ok) + " of 5 seeds");
    o.detail = "fd-only " + std::to_string(fd_ok) + "/5, data-only " + std::to_string(data_ok) +
               "/5";
    return o;
}

// ------------------------------------------------------------------ C11
namespace determinism {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& out) {
    std::string cmd = std::string(FDREPAIR_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> /dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

} // namespace determinism

Outcome run_c11() {
    Outcome o;
    fs::path dir = fs::temp_directory_path() / "fdrepair_acceptance_c11";
    fs::remove_all(dir);
    fs::create_directories(dir);

    {
        std::ofstream d(dir / "d4.csv", std::ios::binary);
        d << fixtures::kD4Csv;
        std::ofstream f(dir / "fds.txt", std::ios::binary);
        f << "A -> B\nC -> D\n";
        std::string clean = "A,B,C,D\n";
        Rng rng(77);
        for (int i = 0; i < 40; ++i) {
            int a = i % 5, b = i % 3;
            clean += std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(a + b * 7) + "," + std::to_string(rng.bounded(9)) + "\n";
        }
        std::ofstream c(dir / "clean.csv", std::ios::binary);
        c << clean;
        std::ofstream cf(dir / "clean_fds.txt", std::ios::binary);
        cf << "A,B -> C\n";
    }

    auto check_twice = [&](const std::string& name, const std::string& args,
                           const std::vector<std::string>& artifacts) {
        using namespace determinism;
        fs::path out1 = dir / (name + ".1.out");
        fs::path out2 = dir / (name + ".2.out");
        int rc1 = run_cli(args, out1);
        std::vector<std::string> first;
        for (const auto& a : artifacts) first.push_back(slurp(dir / a));
        int rc2 = run_cli(args, out2);
        if (rc1 != rc2) fail(o, name + ": exit codes differ");
        if (slurp(out1) != slurp(out2)) fail(o, name + ": reports differ");
        for (std::size_t i = 0; i < artifacts.size(); ++i)
            if (first[i] != slurp(dir / artifacts[i])) fail(o, name + ": artifacts differ");
    };

    std::string d4 = (dir / "d4.csv").string();
    std::string fds = (dir / "fds.txt").string();
    std::string clean = (dir / "clean.csv").string();
    std::string clean_fds = (dir / "clean_fds.txt").string();

    check_twice("repair",
                "repair --data " + d4 + " --fds " + fds + " --tau 4 --seed 9 --out-data " +
                    (dir / "r.csv").string() + " --out-fds " + (dir / "r_fds.txt").string(),
                {"r.csv", "r_fds.txt"});
    check_twice("repair_rel",
                "repair --data " + d4 + " --fds " + fds + " --tau-rel 0.25 --weight distinct",
                {});
    check_twice("range",
                "repair-range --data " + d4 + " --fds " + fds +
                    " --tau-min 0 --tau-max 8 --seed 4",
                {});
    check_twice("inject",
                "inject --data " + clean + " --fds " + clean_fds +
                    " --data-error-rate 0.05 --fd-error-rate 0.5 --seed 6 --out-data " +
                    (dir / "dirty.csv").string() + " --out-fds " +
                    (dir / "dirty_fds.txt").string() + " --out-truth " +
                    (dir / "truth.json").string(),
                {"dirty.csv", "dirty_fds.txt", "truth.json"});
    check_twice("graph", "graph --data " + d4 + " --fds " + fds, {});

    // score over the inject artifacts (already on disk from the run above)
    check_twice("score",
                "score --clean-data " + clean + " --dirty-data " + (dir / "dirty.csv").string() +
                    " --repaired-data " + clean + " --clean-fds " + clean_fds + " --dirty-fds " +
                    (dir / "dirty_fds.txt").string() + " --repaired-fds " + clean_fds,
                {});

    fs::remove_all(dir);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "repair_data output satisfies sigma-prime, also after grounding",
         [] { return run_c1_c2(false); }},
        {2, "dist_d within |cover| * min(|R|-1, |Sigma|)", [] { return run_c1_c2(true); }},
        {3, "greedy vertex cover within twice the optimum", run_c3},
        {4, "A* dist_c equals the exhaustive optimum for every tau",
         [] { return run_c4_c5(false); }},
        {5, "gc never exceeds the cheapest goal below a state", [] { return run_c4_c5(true); }},
        {6, "find_assignment returns none only when nothing exists", run_c6},
        {7, "Figure-4 fixture: tau=2 returns a single-attribute relaxation", run_c7},
        {8, "range sweep equals dense-grid sampling and expands less", run_c8},
        {9, "A* visits no more states than best-first, usually fewer", run_c9},
        {10, "combined F-score peaks at tau_r=0 (FD errors) and tau_r=1 (data errors)", run_c10},
        {11, "identical config and seed give byte-identical reports", run_c11},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        Outcome o = c.run();
        if (o.pass)
            std::printf("PASS criterion %2d: %s%s%s\n", c.id, c.name,
                        o.detail.empty() ? "" : " -- ", o.detail.c_str());
        else {
            std::printf("FAIL criterion %2d: %s -- %s\n", c.id, c.name, o.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
