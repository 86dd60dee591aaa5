#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mosa {

using ObjectiveVector = std::vector<double>;

// A decision vector paired with its evaluated objective vector. `f` must be
// the problem's evaluation of `x`; nothing in the library re-derives it.
struct Solution {
    std::vector<double> x;
    ObjectiveVector f;
};

enum class DominanceRelation {
    Dominates,
    DominatedBy,
    MutuallyNonDominated,
    Equal,
};

// Pareto comparison in the minimization sense: a dominates b when a is no
// worse in every objective and strictly better in at least one.
// Throws std::invalid_argument on length mismatch or non-finite entries.
DominanceRelation compare(std::span<const double> a, std::span<const double> b);

// Per-objective ranges used to normalize domination amounts.
struct ObjectiveRanges {
    std::vector<double> r;
};

// max - min per objective over the given solutions; ranges below 1e-12 are
// replaced by 1.0 (a zero-range objective carries no discriminating
// information). Throws std::invalid_argument on an empty set.
ObjectiveRanges objective_ranges(std::span<const Solution> solutions);

// Same range rule computed over a set of members plus one extra solution,
// without materializing the union.
ObjectiveRanges objective_ranges_with(std::span<const Solution> members,
                                      const Solution& extra);

// Product over differing objectives of |a_i - b_i| / R_i; 0 when a == b.
// The magnitude is symmetric in a and b; direction comes from compare().
// Throws std::invalid_argument when a used divisor R_i <= 0.
double domination_amount(std::span<const double> a, std::span<const double> b,
                         const ObjectiveRanges& ranges);

struct InsertOutcome {
    DominanceRelation relation = DominanceRelation::MutuallyNonDominated;
    // Number of archive members removed (Dominates) or of dominating members
    // (DominatedBy); 0 for the mutually non-dominated case.
    std::size_t count = 0;
    bool inserted = false;
    std::uint64_t inserted_id = 0;
    // Positions of the dominating members, valid while the archive is
    // unchanged (DominatedBy only).
    std::vector<std::size_t> dominator_indices;
    // Members removed by this insertion, including a capacity eviction.
    std::vector<std::pair<std::uint64_t, Solution>> removed;
};

// Set of mutually non-dominated solutions. Members carry stable ids assigned
// in insertion order; an id is never reused. Exact duplicate objective
// vectors are not stored twice.
class ParetoArchive {
public:
    ParetoArchive() = default;
    explicit ParetoArchive(std::size_t capacity);

    // Classifies s against the members and mutates accordingly:
    //  - s dominates k >= 1 members: they are removed, s is inserted;
    //  - s is dominated by k >= 1 members: archive unchanged;
    //  - otherwise s is inserted, except exact duplicates.
    // When a capacity is set and exceeded, the member with the smallest
    // crowding distance is evicted.
    InsertOutcome insert(Solution s);

    std::span<const Solution> members() const { return members_; }
    std::span<const std::uint64_t> ids() const { return ids_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::optional<std::size_t> capacity() const { return capacity_; }
    std::uint64_t next_id() const { return next_id_; }

private:
    std::vector<Solution> members_;
    std::vector<std::uint64_t> ids_;
    std::uint64_t next_id_ = 0;
    std::optional<std::size_t> capacity_;
};

}  // namespace mosa
