#pragma once

#include <string>
#include <vector>

#include "fdrepair/attrset.hpp"
#include "fdrepair/relation.hpp"

namespace fdrepair {

struct FD {
    AttrSet lhs;
    int rhs = -1;
};

// Ordered FD list.  Index i permanently identifies the i-th original FD;
// duplicates produced by extension are retained so the mapping survives.
struct FDSet {
    std::vector<FD> fds;
    int size() const { return static_cast<int>(fds.size()); }
    const FD& operator[](int i) const { return fds.at(i); }
};

// One appended attribute set per FD.
using ExtensionVector = std::vector<AttrSet>;

// Text format: one FD per line, "A,B -> C".  Whitespace-insensitive.
FDSet parse_fds(const std::string& text, const Schema& schema);
std::string format_fd(const FD& fd, const Schema& schema);
std::string format_fds(const FDSet& fds, const Schema& schema);

// Each extension must avoid the FD's own attributes (no trivial FDs).
void validate_extension(const FDSet& sigma, const ExtensionVector& ext);
FDSet apply_extension(const FDSet& sigma, const ExtensionVector& ext);

inline ExtensionVector empty_extension(int fd_count) {
    return ExtensionVector(fd_count, AttrSet{});
}

int extension_attr_count(const ExtensionVector& ext);

// True when `inner` extends `outer` componentwise (Y'_i subset of Y_i).
bool extension_covers(const ExtensionVector& outer, const ExtensionVector& inner);

// Canonical total order: componentwise AttrSet order, first difference wins.
int extension_cmp(const ExtensionVector& a, const ExtensionVector& b);

} // namespace fdrepair
