// Times the partitioned (OpenMP) conflict-graph and difference-set kernels
// against the serial brute-force references on synthetic instances.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fdrepair/conflict.hpp"
#include "fdrepair/rng.hpp"

using namespace fdrepair;

namespace {

VInstance synthetic(int n, int m, int domain, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::string> names;
    for (int a = 0; a < m; ++a) names.push_back("c" + std::to_string(a));
    std::vector<Tuple> rows;
    rows.reserve(n);
    for (int t = 0; t < n; ++t) {
        Tuple row;
        row.reserve(m);
        for (int a = 0; a < m; ++a)
            row.push_back(CellValue::constant(std::to_string(rng.bounded(domain))));
        rows.push_back(std::move(row));
    }
    return VInstance(Schema(names), std::move(rows));
}

double ms_of(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes = {1000, 4000, 8000};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::stoi(argv[i]));
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%8s %12s %12s %8s %12s %12s %8s %8s\n", "tuples", "graph_ref", "graph_par",
                "speedup", "dsets_ref", "dsets_par", "speedup", "edges");

    for (int n : sizes) {
        VInstance inst = synthetic(n, 8, 40, 7);
        FDSet sigma;
        Schema s = inst.schema();
        sigma.fds.push_back({AttrSet::single(0), 1});
        sigma.fds.push_back({AttrSet::single(2).with(3), 4});

        auto t0 = std::chrono::steady_clock::now();
        ConflictGraph ref = build_conflict_graph_reference(inst, sigma);
        double graph_ref = ms_of(t0);

        t0 = std::chrono::steady_clock::now();
        ConflictGraph par = build_conflict_graph(inst, sigma);
        double graph_par = ms_of(t0);

        if (ref.edges.size() != par.edges.size()) {
            std::printf("MISMATCH: reference %zu edges, partitioned %zu edges\n",
                        ref.edges.size(), par.edges.size());
            return 1;
        }

        t0 = std::chrono::steady_clock::now();
        DifferenceCatalog dref = difference_sets_reference(inst, par);
        double dsets_ref = ms_of(t0);

        t0 = std::chrono::steady_clock::now();
        DifferenceCatalog dpar = difference_sets(inst, par);
        double dsets_par = ms_of(t0);

        if (dref.entries.size() != dpar.entries.size()) {
            std::printf("MISMATCH: difference catalogs disagree\n");
            return 1;
        }

        std::printf("%8d %10.2fms %10.2fms %7.2fx %10.2fms %10.2fms %7.2fx %8zu\n", n, graph_ref,
                    graph_par, graph_ref / graph_par, dsets_ref, dsets_par, dsets_ref / dsets_par,
                    par.edges.size());
    }
    return 0;
}
