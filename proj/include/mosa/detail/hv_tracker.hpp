#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mosa/core.hpp"
#include "mosa/rng.hpp"

namespace mosa::detail {

// Monte-Carlo hypervolume estimate maintained incrementally across archive
// changes. A fixed set of uniform samples lives in a box the owner derives
// from the front envelope; per sample the tracker keeps how many members
// dominate it and the XOR of their ids, so the sole dominator of a
// singly-covered sample is recoverable without a scan. hv() is O(1) and
// membership changes are O(samples); rebuilds redraw the samples.
class HvSampleTracker {
public:
    HvSampleTracker(std::size_t n_objs, std::size_t n_samples);

    // Redraws the samples inside [lo, hi] and recounts the given members.
    void rebuild(std::span<const double> lo, std::span<const double> hi,
                 std::span<const Solution> members,
                 std::span<const std::uint64_t> ids, Rng& rng);

    bool has_box() const { return !hi_.empty(); }
    std::span<const double> box_lo() const { return lo_; }
    std::span<const double> box_hi() const { return hi_; }

    void add_member(std::uint64_t id, std::span<const double> objs);
    void remove_member(std::uint64_t id, std::span<const double> objs);

    // Fraction of samples dominated by at least one member.
    double hv() const;

    // Member id with the most solely-dominated samples, if any sample is
    // solely dominated.
    std::optional<std::uint64_t> max_contribution_id() const;

private:
    std::size_t n_objs_;
    std::size_t n_samples_;
    std::vector<double> lo_, hi_;
    std::vector<double> samples_;  // n_samples x n_objs, row-major
    std::vector<std::uint32_t> cover_count_;
    std::vector<std::uint64_t> cover_xor_;
    std::size_t dominated_ = 0;

    bool dominates_sample(std::span<const double> objs, std::size_t s) const;
};

}  // namespace mosa::detail
