#include "fdrepair/weights.hpp"

#include <mutex>
#include <stdexcept>

namespace fdrepair {

WeightKind parse_weight_kind(const std::string& s) {
    if (s == "count") return WeightKind::AttrCount;
    if (s == "distinct") return WeightKind::DistinctCount;
    throw std::runtime_error("unknown weight kind '" + s + "' (expected count or distinct)");
}

std::string weight_kind_name(WeightKind k) {
    return k == WeightKind::AttrCount ? "count" : "distinct";
}

Weighter::Weighter(WeightKind kind, const VInstance* frozen) : kind_(kind), frozen_(frozen) {
    if (kind_ == WeightKind::DistinctCount && frozen_ == nullptr)
        throw std::runtime_error("distinct-count weighting requires a frozen instance");
}

std::int64_t Weighter::weight(const AttrSet& ys) const {
    if (ys.empty()) return 0;
    if (kind_ == WeightKind::AttrCount) return ys.size();
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(ys.mask());
        if (it != cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = cache_.find(ys.mask());
    if (it != cache_.end()) return it->second;
    std::int64_t w = distinct_count(*frozen_, ys);
    cache_.emplace(ys.mask(), w);
    return w;
}

std::int64_t Weighter::dist_c(const ExtensionVector& ext) const {
    std::int64_t sum = 0;
    for (const AttrSet& y : ext) sum += weight(y);
    return sum;
}

} // namespace fdrepair
