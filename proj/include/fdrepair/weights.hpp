#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>

#include "fdrepair/attrset.hpp"
#include "fdrepair/fd.hpp"
#include "fdrepair/relation.hpp"

namespace fdrepair {

enum class WeightKind { AttrCount, DistinctCount };

WeightKind parse_weight_kind(const std::string& s);
std::string weight_kind_name(WeightKind k);

// w(Y): non-negative, monotone, w(empty) = 0.  Distinct counts are frozen on
// the instance supplied at construction and cached per attribute set; the
// cache admits concurrent readers and serializes fills.
class Weighter {
public:
    explicit Weighter(WeightKind kind, const VInstance* frozen = nullptr);

    WeightKind kind() const { return kind_; }
    std::int64_t weight(const AttrSet& ys) const;
    std::int64_t dist_c(const ExtensionVector& ext) const;

private:
    WeightKind kind_;
    const VInstance* frozen_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::uint64_t, std::int64_t> cache_;
};

} // namespace fdrepair
