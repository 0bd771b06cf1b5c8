#pragma once

#include <string>
#include <vector>

#include "fdrepair/csv.hpp"
#include "fdrepair/fd.hpp"
#include "fdrepair/relation.hpp"
#include "fdrepair/rng.hpp"

namespace fixtures {

using namespace fdrepair;

// Four tuples over R = {A,B,C,D} whose consecutive difference sets are BD,
// AD, BCD; with {A->B, C->D} the conflict graph is the path t0-t1-t2-t3.
inline const char* kD4Csv = "A,B,C,D\n1,1,1,1\n1,2,1,2\n2,2,1,1\n2,1,2,2\n";

inline VInstance d4() { return load_csv_string(kD4Csv); }

inline FDSet sigma_ab_cd(const Schema& schema) {
    return parse_fds("A -> B\nC -> D\n", schema);
}

inline AttrSet attrs_of(const Schema& schema, const std::string& names) {
    AttrSet s;
    for (char c : names) s = s.with(schema.require(std::string(1, c)));
    return s;
}

inline VInstance random_instance(Rng& rng, int n, int m, int domain) {
    std::vector<std::string> names;
    for (int a = 0; a < m; ++a) names.push_back(std::string(1, static_cast<char>('A' + a)));
    std::vector<Tuple> rows;
    for (int t = 0; t < n; ++t) {
        Tuple row;
        for (int a = 0; a < m; ++a)
            row.push_back(CellValue::constant(std::to_string(rng.bounded(domain))));
        rows.push_back(std::move(row));
    }
    return VInstance(Schema(names), std::move(rows));
}

inline FDSet random_sigma(Rng& rng, const Schema& schema, int fd_count, int max_lhs = 2) {
    FDSet sigma;
    const int m = schema.size();
    for (int i = 0; i < fd_count; ++i) {
        FD fd;
        fd.rhs = static_cast<int>(rng.bounded(m));
        int lhs_size = 1 + static_cast<int>(rng.bounded(max_lhs));
        while (fd.lhs.size() < lhs_size) {
            int a = static_cast<int>(rng.bounded(m));
            if (a != fd.rhs) fd.lhs = fd.lhs.with(a);
        }
        sigma.fds.push_back(fd);
    }
    return sigma;
}

} // namespace fixtures
