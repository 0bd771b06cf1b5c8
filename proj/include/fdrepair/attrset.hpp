#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fdrepair {

// A set of attribute indices, backed by a 64-bit mask.  Relations are capped
// at 64 attributes; the loader enforces this.
class AttrSet {
public:
    AttrSet() = default;
    explicit AttrSet(std::uint64_t mask) : mask_(mask) {}

    static AttrSet single(int attr) { return AttrSet(std::uint64_t{1} << attr); }

    std::uint64_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const { return __builtin_popcountll(mask_); }

    bool contains(int attr) const { return (mask_ >> attr) & 1; }
    bool subset_of(const AttrSet& o) const { return (mask_ & ~o.mask_) == 0; }
    bool intersects(const AttrSet& o) const { return (mask_ & o.mask_) != 0; }

    AttrSet with(int attr) const { return AttrSet(mask_ | (std::uint64_t{1} << attr)); }
    AttrSet without(int attr) const { return AttrSet(mask_ & ~(std::uint64_t{1} << attr)); }
    AttrSet unite(const AttrSet& o) const { return AttrSet(mask_ | o.mask_); }
    AttrSet intersect(const AttrSet& o) const { return AttrSet(mask_ & o.mask_); }
    AttrSet minus(const AttrSet& o) const { return AttrSet(mask_ & ~o.mask_); }

    // Attribute indices in ascending order.
    std::vector<int> attrs() const {
        std::vector<int> out;
        std::uint64_t m = mask_;
        while (m) {
            out.push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
        return out;
    }

    int max_attr() const { return mask_ ? 63 - __builtin_clzll(mask_) : -1; }

    bool operator==(const AttrSet& o) const { return mask_ == o.mask_; }
    bool operator!=(const AttrSet& o) const { return mask_ != o.mask_; }

private:
    std::uint64_t mask_ = 0;
};

// Canonical order: lexicographic over the ascending attribute sequence, with
// a proper prefix ordered before its extensions ({A} < {A,D} < {B}).
inline int attrset_cmp(const AttrSet& a, const AttrSet& b) {
    std::uint64_t ma = a.mask(), mb = b.mask();
    while (ma && mb) {
        int la = __builtin_ctzll(ma), lb = __builtin_ctzll(mb);
        if (la != lb) return la < lb ? -1 : 1;
        ma &= ma - 1;
        mb &= mb - 1;
    }
    if (ma == mb) return 0;
    return ma == 0 ? -1 : 1;
}

inline bool attrset_less(const AttrSet& a, const AttrSet& b) { return attrset_cmp(a, b) < 0; }

} // namespace fdrepair
