#include "fdrepair/relation.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "fdrepair/fd.hpp"

namespace fdrepair {

Schema::Schema(std::vector<std::string> attributes) : names_(std::move(attributes)) {
    if (names_.size() > 64)
        throw std::runtime_error("schema error: at most 64 attributes supported, got " +
                                 std::to_string(names_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second)
            throw std::runtime_error("schema error: duplicate attribute name '" + n + "'");
    }
}

int Schema::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

int Schema::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw std::runtime_error("schema error: unknown attribute '" + name + "'");
    return i;
}

AttrSet Schema::all() const {
    if (names_.empty()) return AttrSet{};
    if (names_.size() == 64) return AttrSet(~std::uint64_t{0});
    return AttrSet((std::uint64_t{1} << names_.size()) - 1);
}

std::string Schema::set_names(const AttrSet& s, const std::string& sep) const {
    std::string out;
    for (int a : s.attrs()) {
        if (!out.empty()) out += sep;
        out += name(a);
    }
    return out;
}

bool cells_equal(const CellValue& u, const CellValue& v) {
    if (u.is_variable() != v.is_variable()) return false;
    if (u.is_variable())
        return u.var_attr() == v.var_attr() && u.var_index() == v.var_index();
    return u.text() == v.text();
}

std::string cell_key(const CellValue& c) {
    if (c.is_variable())
        return "v:" + std::to_string(c.var_attr()) + ":" + std::to_string(c.var_index());
    return "c:" + c.text();
}

VInstance::VInstance(Schema schema, std::vector<Tuple> tuples)
    : schema_(std::move(schema)), tuples_(std::move(tuples)) {
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
        if (static_cast<int>(tuples_[t].size()) != schema_.size())
            throw std::runtime_error("instance error: tuple " + std::to_string(t) + " has " +
                                     std::to_string(tuples_[t].size()) + " cells, schema has " +
                                     std::to_string(schema_.size()));
        for (int a = 0; a < schema_.size(); ++a) {
            const CellValue& c = tuples_[t][a];
            if (c.is_variable() && c.var_attr() != a)
                throw std::runtime_error("instance error: variable for attribute " +
                                         std::to_string(c.var_attr()) + " stored in column " +
                                         std::to_string(a));
        }
    }
}

std::int64_t VInstance::max_var_index(int attr) const {
    std::int64_t mx = 0;
    for (const auto& t : tuples_) {
        const CellValue& c = t[attr];
        if (c.is_variable()) mx = std::max(mx, c.var_index());
    }
    return mx;
}

SatisfactionReport check_satisfies(const VInstance& inst, const std::vector<FD>& fds) {
    const int n = inst.tuple_count();
    const AttrSet all = inst.schema().all();
    for (const FD& fd : fds) {
        if (!fd.lhs.subset_of(all) || fd.rhs < 0 || fd.rhs >= inst.attr_count())
            throw std::runtime_error("schema error: FD references unknown attribute");
    }

    SatisfactionReport rep;
    // Group tuples by LHS projection, sub-group by RHS; violating pairs are
    // cross-sub-group pairs within a group.
    for (std::size_t fi = 0; fi < fds.size(); ++fi) {
        const FD& fd = fds[fi];
        std::unordered_map<std::string, std::vector<int>> groups;
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
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (!cells_equal(inst.cell(members[i], fd.rhs), inst.cell(members[j], fd.rhs)))
                        rep.violations.push_back({members[i], members[j], static_cast<int>(fi)});
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end(), [](const auto& a, const auto& b) {
        if (a.t1 != b.t1) return a.t1 < b.t1;
        if (a.t2 != b.t2) return a.t2 < b.t2;
        return a.fd_index < b.fd_index;
    });
    rep.satisfied = rep.violations.empty();
    return rep;
}

CellDelta dist_d(const VInstance& a, const VInstance& b) {
    if (!(a.schema() == b.schema()))
        throw std::runtime_error("dist_d error: schema mismatch");
    if (a.tuple_count() != b.tuple_count())
        throw std::runtime_error("dist_d error: tuple count mismatch (" +
                                 std::to_string(a.tuple_count()) + " vs " +
                                 std::to_string(b.tuple_count()) + ")");
    CellDelta delta;
    for (int t = 0; t < a.tuple_count(); ++t)
        for (int at = 0; at < a.attr_count(); ++at)
            if (!cells_equal(a.cell(t, at), b.cell(t, at)))
                delta.entries.push_back({t, at, a.cell(t, at), b.cell(t, at)});
    return delta;
}

std::int64_t distinct_count(const VInstance& inst, const AttrSet& ys) {
    if (ys.empty()) throw std::runtime_error("distinct_count error: empty attribute set");
    if (!ys.subset_of(inst.schema().all()))
        throw std::runtime_error("distinct_count error: attribute outside schema");
    std::unordered_set<std::string> seen;
    for (int t = 0; t < inst.tuple_count(); ++t) {
        std::string key;
        for (int a : ys.attrs()) {
            key += cell_key(inst.cell(t, a));
            key += '\x1f';
        }
        seen.insert(std::move(key));
    }
    return static_cast<std::int64_t>(seen.size());
}

} // namespace fdrepair
