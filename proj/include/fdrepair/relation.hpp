#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdrepair/attrset.hpp"

namespace fdrepair {

class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<std::string> attributes);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int attr) const { return names_.at(attr); }

    // -1 when the attribute is unknown.
    int index_of(const std::string& name) const;
    int require(const std::string& name) const; // throws on unknown attribute

    AttrSet all() const;
    std::string set_names(const AttrSet& s, const std::string& sep = ",") const;

    bool operator==(const Schema& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

// A cell holds either a constant (exact text) or a per-attribute variable.
// Distinct variables of one attribute are pairwise unequal and never equal
// any constant.
class CellValue {
public:
    CellValue() : is_var_(false) {}

    static CellValue constant(std::string text) {
        CellValue c;
        c.is_var_ = false;
        c.text_ = std::move(text);
        return c;
    }
    static CellValue variable(int attr, std::int64_t index) {
        CellValue c;
        c.is_var_ = true;
        c.attr_ = attr;
        c.var_index_ = index;
        return c;
    }

    bool is_variable() const { return is_var_; }
    bool is_constant() const { return !is_var_; }
    const std::string& text() const { return text_; }
    int var_attr() const { return attr_; }
    std::int64_t var_index() const { return var_index_; }

private:
    bool is_var_;
    std::string text_;
    int attr_ = -1;
    std::int64_t var_index_ = 0;
};

bool cells_equal(const CellValue& u, const CellValue& v);

// Stable key for hashing/grouping; two cells map to the same key iff
// cells_equal holds (within one column).
std::string cell_key(const CellValue& c);

using Tuple = std::vector<CellValue>;

// Immutable after construction; repairs copy-and-edit.
class VInstance {
public:
    VInstance() = default;
    VInstance(Schema schema, std::vector<Tuple> tuples);

    const Schema& schema() const { return schema_; }
    int tuple_count() const { return static_cast<int>(tuples_.size()); }
    int attr_count() const { return schema_.size(); }
    std::int64_t cell_count() const {
        return static_cast<std::int64_t>(tuple_count()) * attr_count();
    }

    const Tuple& tuple(int tid) const { return tuples_.at(tid); }
    const CellValue& cell(int tid, int attr) const { return tuples_.at(tid).at(attr); }
    const std::vector<Tuple>& tuples() const { return tuples_; }

    void set_cell(int tid, int attr, CellValue v) { tuples_.at(tid).at(attr) = std::move(v); }

    // Largest variable index present in a column, 0 when none.
    std::int64_t max_var_index(int attr) const;

private:
    Schema schema_;
    std::vector<Tuple> tuples_;
};

struct CellEdit {
    int tuple_id;
    int attr;
    CellValue old_value;
    CellValue new_value;
};

struct CellDelta {
    std::vector<CellEdit> entries; // sorted by (tuple_id, attr)
    int count() const { return static_cast<int>(entries.size()); }
};

struct FD;

struct ViolatingPair {
    int t1;
    int t2;
    int fd_index;
};

struct SatisfactionReport {
    bool satisfied = true;
    std::vector<ViolatingPair> violations; // sorted by (t1, t2, fd_index)
};

// Declared here, implemented with the FD machinery in relation.cpp.
SatisfactionReport check_satisfies(const VInstance& inst, const std::vector<FD>& fds);

CellDelta dist_d(const VInstance& a, const VInstance& b);

// Number of distinct projections of the instance onto Y.  Weighting freezes
// this on the original input instance.
std::int64_t distinct_count(const VInstance& inst, const AttrSet& ys);

} // namespace fdrepair
