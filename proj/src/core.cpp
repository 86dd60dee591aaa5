#include "mosa/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mosa/metrics.hpp"

namespace mosa {

namespace {

// Comparison loop without input validation, for callers that already hold
// evaluated, validated vectors (archive scans).
DominanceRelation compare_unchecked(std::span<const double> a,
                                    std::span<const double> b) {
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) {
            a_better = true;
        } else if (b[i] < a[i]) {
            b_better = true;
        }
    }
    if (a_better && b_better) return DominanceRelation::MutuallyNonDominated;
    if (a_better) return DominanceRelation::Dominates;
    if (b_better) return DominanceRelation::DominatedBy;
    return DominanceRelation::Equal;
}

void validate_vector(std::span<const double> v, const char* name) {
    if (v.empty()) throw std::invalid_argument(std::string(name) + " is empty");
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string(name) +
                                        " contains a non-finite entry");
        }
    }
}

}  // namespace

DominanceRelation compare(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("compare: objective vector length mismatch");
    }
    validate_vector(a, "compare: a");
    validate_vector(b, "compare: b");
    return compare_unchecked(a, b);
}

namespace {

constexpr double kDegenerateRange = 1e-12;

ObjectiveRanges ranges_from_minmax(const std::vector<double>& lo,
                                   const std::vector<double>& hi) {
    ObjectiveRanges out;
    out.r.resize(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        double span = hi[i] - lo[i];
        out.r[i] = span < kDegenerateRange ? 1.0 : span;
    }
    return out;
}

}  // namespace

ObjectiveRanges objective_ranges(std::span<const Solution> solutions) {
    if (solutions.empty()) {
        throw std::invalid_argument("objective_ranges: empty solution set");
    }
    std::vector<double> lo = solutions[0].f;
    std::vector<double> hi = solutions[0].f;
    for (const Solution& s : solutions.subspan(1)) {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] = std::min(lo[i], s.f[i]);
            hi[i] = std::max(hi[i], s.f[i]);
        }
    }
    return ranges_from_minmax(lo, hi);
}

ObjectiveRanges objective_ranges_with(std::span<const Solution> members,
                                      const Solution& extra) {
    std::vector<double> lo = extra.f;
    std::vector<double> hi = extra.f;
    for (const Solution& s : members) {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] = std::min(lo[i], s.f[i]);
            hi[i] = std::max(hi[i], s.f[i]);
        }
    }
    return ranges_from_minmax(lo, hi);
}

double domination_amount(std::span<const double> a, std::span<const double> b,
                         const ObjectiveRanges& ranges) {
    if (a.size() != b.size() || a.size() != ranges.r.size()) {
        throw std::invalid_argument("domination_amount: length mismatch");
    }
    double product = 1.0;
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (ranges.r[i] <= 0.0) {
            throw std::invalid_argument(
                "domination_amount: degenerate range used as divisor");
        }
        product *= std::abs(a[i] - b[i]) / ranges.r[i];
        any = true;
    }
    return any ? product : 0.0;
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw std::invalid_argument("ParetoArchive: capacity must be positive");
    }
}

InsertOutcome ParetoArchive::insert(Solution s) {
    validate_vector(s.f, "archive_insert: objectives");

    InsertOutcome out;
    std::vector<std::size_t> dominated;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        switch (compare_unchecked(s.f, members_[i].f)) {
            case DominanceRelation::Equal:
                // Exact duplicate; never stored twice.
                out.relation = DominanceRelation::MutuallyNonDominated;
                return out;
            case DominanceRelation::Dominates:
                dominated.push_back(i);
                break;
            case DominanceRelation::DominatedBy:
                out.dominator_indices.push_back(i);
                break;
            case DominanceRelation::MutuallyNonDominated:
                break;
        }
    }

    if (!out.dominator_indices.empty()) {
        out.relation = DominanceRelation::DominatedBy;
        out.count = out.dominator_indices.size();
        return out;
    }

    if (!dominated.empty()) {
        out.relation = DominanceRelation::Dominates;
        out.count = dominated.size();
        // Compact in one pass, keeping member order.
        std::size_t write = 0;
        std::size_t next_removed = 0;
        for (std::size_t read = 0; read < members_.size(); ++read) {
            if (next_removed < dominated.size() && read == dominated[next_removed]) {
                out.removed.emplace_back(ids_[read], std::move(members_[read]));
                ++next_removed;
                continue;
            }
            if (write != read) {
                members_[write] = std::move(members_[read]);
                ids_[write] = ids_[read];
            }
            ++write;
        }
        members_.resize(write);
        ids_.resize(write);
    } else {
        out.relation = DominanceRelation::MutuallyNonDominated;
    }

    out.inserted = true;
    out.inserted_id = next_id_++;
    members_.push_back(std::move(s));
    ids_.push_back(out.inserted_id);

    if (capacity_ && members_.size() > *capacity_) {
        std::vector<ObjectiveVector> objs;
        objs.reserve(members_.size());
        for (const Solution& m : members_) objs.push_back(m.f);
        std::vector<double> crowd = crowding_distances(objs);
        std::size_t victim = 0;
        for (std::size_t i = 1; i < crowd.size(); ++i) {
            if (crowd[i] < crowd[victim]) victim = i;
        }
        out.removed.emplace_back(ids_[victim], std::move(members_[victim]));
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
        ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return out;
}

}  // namespace mosa
