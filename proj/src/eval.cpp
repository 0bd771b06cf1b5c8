#include "fdrepair/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fdrepair/conflict.hpp"
#include "fdrepair/rng.hpp"

namespace fdrepair {

namespace {

// Tuples grouped by projection, group ids in first-occurrence order so the
// enumeration is deterministic.
std::vector<std::vector<int>> project_groups(const VInstance& inst, const AttrSet& attrs) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::vector<int>> groups;
    for (int t = 0; t < inst.tuple_count(); ++t) {
        std::string key;
        for (int a : attrs.attrs()) {
            key += cell_key(inst.cell(t, a));
            key += '\x1f';
        }
        auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(groups.size()));
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(t);
    }
    return groups;
}

std::string fresh_constant(const VInstance& inst, int attr, std::int64_t& counter) {
    while (true) {
        std::string cand = "~e" + std::to_string(counter++);
        bool taken = false;
        for (int t = 0; t < inst.tuple_count() && !taken; ++t) {
            const CellValue& c = inst.cell(t, attr);
            if (c.is_constant() && c.text() == cand) taken = true;
        }
        if (!taken) return cand;
    }
}

struct RhsCandidate {
    int fd;
    int tuple;
};

struct LhsCandidate {
    int fd;
    int attr; // B, copied from partner
    int tuple;
    int partner;
};

bool cell_changed(const std::unordered_set<std::int64_t>& changed, int t, int a, int m) {
    return changed.count(static_cast<std::int64_t>(t) * m + a) > 0;
}

} // namespace

InjectionResult perturb_data(const VInstance& clean, const FDSet& sigma, double rate,
                             std::uint64_t seed) {
    if (rate < 0 || rate > 1) throw std::runtime_error("data error rate must be in [0,1]");
    if (!check_satisfies(clean, sigma.fds).satisfied)
        throw std::runtime_error("perturb_data: input instance must satisfy the FDs");

    const int m = clean.attr_count();
    const std::int64_t target = static_cast<std::int64_t>(
        std::ceil(rate * static_cast<double>(clean.cell_count())));

    InjectionResult out;
    out.dirty = clean;
    Rng rng(seed);
    std::unordered_set<std::int64_t> changed;
    std::int64_t fresh_counter = 0;

    auto try_rhs = [&]() -> bool {
        std::vector<RhsCandidate> cands;
        for (int fi = 0; fi < sigma.size(); ++fi) {
            const FD& fd = sigma[fi];
            AttrSet xa = fd.lhs.with(fd.rhs);
            for (const auto& group : project_groups(out.dirty, xa)) {
                if (group.size() < 2) continue;
                for (int t : group)
                    if (!cell_changed(changed, t, fd.rhs, m)) cands.push_back({fi, t});
            }
        }
        if (cands.empty()) return false;
        const RhsCandidate& pick = cands[rng.bounded(cands.size())];
        const FD& fd = sigma[pick.fd];
        CellValue old = out.dirty.cell(pick.tuple, fd.rhs);
        out.dirty.set_cell(pick.tuple, fd.rhs,
                           CellValue::constant(fresh_constant(out.dirty, fd.rhs, fresh_counter)));
        out.injected.entries.push_back(
            {pick.tuple, fd.rhs, old, out.dirty.cell(pick.tuple, fd.rhs)});
        changed.insert(static_cast<std::int64_t>(pick.tuple) * m + fd.rhs);
        return true;
    };

    auto try_lhs = [&]() -> bool {
        std::vector<LhsCandidate> cands;
        for (int fi = 0; fi < sigma.size(); ++fi) {
            const FD& fd = sigma[fi];
            for (int b : fd.lhs.attrs()) {
                AttrSet rest = fd.lhs.without(b);
                std::vector<std::vector<int>> groups;
                if (rest.empty())
                    groups.push_back([&] {
                        std::vector<int> all(out.dirty.tuple_count());
                        for (int t = 0; t < out.dirty.tuple_count(); ++t) all[t] = t;
                        return all;
                    }());
                else
                    groups = project_groups(out.dirty, rest);
                for (const auto& group : groups) {
                    if (group.size() < 2) continue;
                    for (std::size_t i = 0; i < group.size(); ++i) {
                        for (std::size_t j = 0; j < group.size(); ++j) {
                            if (i == j) continue;
                            int ti = group[i], tj = group[j];
                            if (cells_equal(out.dirty.cell(ti, b), out.dirty.cell(tj, b)))
                                continue;
                            if (cells_equal(out.dirty.cell(ti, fd.rhs),
                                            out.dirty.cell(tj, fd.rhs)))
                                continue;
                            if (cell_changed(changed, ti, b, m)) continue;
                            cands.push_back({fi, b, ti, tj});
                        }
                    }
                }
            }
        }
        if (cands.empty()) return false;
        const LhsCandidate& pick = cands[rng.bounded(cands.size())];
        CellValue old = out.dirty.cell(pick.tuple, pick.attr);
        out.dirty.set_cell(pick.tuple, pick.attr, out.dirty.cell(pick.partner, pick.attr));
        out.injected.entries.push_back(
            {pick.tuple, pick.attr, old, out.dirty.cell(pick.tuple, pick.attr)});
        changed.insert(static_cast<std::int64_t>(pick.tuple) * m + pick.attr);
        return true;
    };

    while (static_cast<std::int64_t>(out.injected.entries.size()) < target) {
        bool rhs_first = rng.bounded(2) == 0;
        bool ok = rhs_first ? (try_rhs() || try_lhs()) : (try_lhs() || try_rhs());
        if (!ok) break;
    }
    // entries stay in injection order; each step is guaranteed to create a
    // new violation against the instance as it was at that moment
    out.shortfall =
        static_cast<int>(target - static_cast<std::int64_t>(out.injected.entries.size()));
    return out;
}

FdPerturbation perturb_fds(const FDSet& clean, double rate, std::uint64_t seed,
                           const Schema& schema) {
    (void)schema;
    if (rate < 0 || rate > 1) throw std::runtime_error("FD error rate must be in [0,1]");
    std::int64_t total = 0;
    for (const FD& fd : clean.fds) total += fd.lhs.size();
    const std::int64_t target =
        static_cast<std::int64_t>(std::ceil(rate * static_cast<double>(total)));

    FdPerturbation out;
    out.dirty = clean;
    out.removed = empty_extension(clean.size());
    Rng rng(seed);

    for (std::int64_t step = 0; step < target; ++step) {
        std::vector<std::pair<int, int>> eligible; // (fd, attr)
        for (int i = 0; i < out.dirty.size(); ++i)
            if (out.dirty[i].lhs.size() >= 2)
                for (int a : out.dirty[i].lhs.attrs()) eligible.push_back({i, a});
        if (eligible.empty())
            throw std::runtime_error("FD error rate would empty a left-hand side");
        auto [fd, attr] = eligible[rng.bounded(eligible.size())];
        out.dirty.fds[fd].lhs = out.dirty.fds[fd].lhs.without(attr);
        out.removed[fd] = out.removed[fd].with(attr);
    }
    return out;
}

namespace {

double ratio(std::int64_t num, std::int64_t denom, std::int64_t other) {
    if (denom > 0) return static_cast<double>(num) / static_cast<double>(denom);
    return other == 0 ? 1.0 : 0.0;
}

double f_score(double p, double r) { return (p + r) > 0 ? 2 * p * r / (p + r) : 0.0; }

} // namespace

QualityScores score_repair(const VInstance& clean, const VInstance& dirty,
                           const VInstance& repaired, const FDSet& sigma_clean,
                           const FDSet& sigma_dirty, const FDSet& sigma_repaired) {
    if (!(clean.schema() == dirty.schema()) || !(clean.schema() == repaired.schema()))
        throw std::runtime_error("score error: schemas are misaligned");
    if (clean.tuple_count() != dirty.tuple_count() ||
        clean.tuple_count() != repaired.tuple_count())
        throw std::runtime_error("score error: tuple counts are misaligned");
    if (sigma_clean.size() != sigma_dirty.size() || sigma_clean.size() != sigma_repaired.size())
        throw std::runtime_error("score error: FD counts are misaligned");
    for (int i = 0; i < sigma_clean.size(); ++i) {
        if (sigma_clean[i].rhs != sigma_dirty[i].rhs || sigma_clean[i].rhs != sigma_repaired[i].rhs)
            throw std::runtime_error("score error: FD right-hand sides are misaligned");
        if (!sigma_dirty[i].lhs.subset_of(sigma_clean[i].lhs))
            throw std::runtime_error("score error: dirty FD " + std::to_string(i) +
                                     " is not a reduction of the clean FD");
        if (!sigma_dirty[i].lhs.subset_of(sigma_repaired[i].lhs))
            throw std::runtime_error("score error: repaired FD " + std::to_string(i) +
                                     " is not an extension of the dirty FD");
    }

    std::int64_t erroneous = 0, mods = 0, correct = 0;
    for (int t = 0; t < clean.tuple_count(); ++t) {
        for (int a = 0; a < clean.attr_count(); ++a) {
            bool err = !cells_equal(clean.cell(t, a), dirty.cell(t, a));
            bool mod = !cells_equal(dirty.cell(t, a), repaired.cell(t, a));
            if (err) ++erroneous;
            if (mod) ++mods;
            if (err && mod &&
                (cells_equal(repaired.cell(t, a), clean.cell(t, a)) ||
                 repaired.cell(t, a).is_variable()))
                ++correct;
        }
    }

    std::int64_t removed = 0, appended = 0, correct_appended = 0;
    for (int i = 0; i < sigma_clean.size(); ++i) {
        AttrSet rem = sigma_clean[i].lhs.minus(sigma_dirty[i].lhs);
        AttrSet app = sigma_repaired[i].lhs.minus(sigma_dirty[i].lhs);
        removed += rem.size();
        appended += app.size();
        correct_appended += app.intersect(rem).size();
    }

    QualityScores s;
    s.data_precision = ratio(correct, mods, erroneous);
    s.data_recall = ratio(correct, erroneous, mods);
    s.fd_precision = ratio(correct_appended, appended, removed);
    s.fd_recall = ratio(correct_appended, removed, appended);
    s.data_f = f_score(s.data_precision, s.data_recall);
    s.fd_f = f_score(s.fd_precision, s.fd_recall);
    s.combined_f = (s.data_f + s.fd_f) / 2;
    return s;
}

std::int64_t tau_from_relative(double tau_r, const FDSet& sigma, const VInstance& inst) {
    if (tau_r < 0 || tau_r > 1) throw std::runtime_error("tau_r must be in [0,1]");
    DeltaP dp = delta_p(inst, sigma);
    return static_cast<std::int64_t>(std::ceil(tau_r * static_cast<double>(dp.value)));
}

} // namespace fdrepair
