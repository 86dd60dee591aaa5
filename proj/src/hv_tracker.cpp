#include "mosa/detail/hv_tracker.hpp"

#include <stdexcept>
#include <unordered_map>

namespace mosa::detail {

HvSampleTracker::HvSampleTracker(std::size_t n_objs, std::size_t n_samples)
    : n_objs_(n_objs), n_samples_(n_samples) {
    if (n_objs < 2) throw std::invalid_argument("HvSampleTracker: n_objs < 2");
    if (n_samples < 1) throw std::invalid_argument("HvSampleTracker: no samples");
}

void HvSampleTracker::rebuild(std::span<const double> lo,
                              std::span<const double> hi,
                              std::span<const Solution> members,
                              std::span<const std::uint64_t> ids, Rng& rng) {
    if (lo.size() != n_objs_ || hi.size() != n_objs_) {
        throw std::invalid_argument("HvSampleTracker: box dimension mismatch");
    }
    lo_.assign(lo.begin(), lo.end());
    hi_.assign(hi.begin(), hi.end());
    for (std::size_t i = 0; i < n_objs_; ++i) {
        if (!(hi_[i] > lo_[i])) hi_[i] = lo_[i] + 1.0;
    }

    samples_.resize(n_samples_ * n_objs_);
    for (std::size_t s = 0; s < n_samples_; ++s) {
        for (std::size_t i = 0; i < n_objs_; ++i) {
            samples_[s * n_objs_ + i] = lo_[i] + (hi_[i] - lo_[i]) * rng.uniform01();
        }
    }
    cover_count_.assign(n_samples_, 0);
    cover_xor_.assign(n_samples_, 0);
    dominated_ = 0;
    for (std::size_t m = 0; m < members.size(); ++m) {
        add_member(ids[m], members[m].f);
    }
}

bool HvSampleTracker::dominates_sample(std::span<const double> objs,
                                       std::size_t s) const {
    const double* sample = samples_.data() + s * n_objs_;
    for (std::size_t i = 0; i < n_objs_; ++i) {
        if (objs[i] > sample[i]) return false;
    }
    return true;
}

void HvSampleTracker::add_member(std::uint64_t id, std::span<const double> objs) {
    for (std::size_t s = 0; s < cover_count_.size(); ++s) {
        if (!dominates_sample(objs, s)) continue;
        if (cover_count_[s]++ == 0) ++dominated_;
        cover_xor_[s] ^= id;
    }
}

void HvSampleTracker::remove_member(std::uint64_t id,
                                    std::span<const double> objs) {
    for (std::size_t s = 0; s < cover_count_.size(); ++s) {
        if (!dominates_sample(objs, s)) continue;
        if (--cover_count_[s] == 0) --dominated_;
        cover_xor_[s] ^= id;
    }
}

double HvSampleTracker::hv() const {
    return static_cast<double>(dominated_) / static_cast<double>(n_samples_);
}

std::optional<std::uint64_t> HvSampleTracker::max_contribution_id() const {
    std::unordered_map<std::uint64_t, std::size_t> sole_counts;
    for (std::size_t s = 0; s < cover_count_.size(); ++s) {
        if (cover_count_[s] == 1) ++sole_counts[cover_xor_[s]];
    }
    std::optional<std::uint64_t> best;
    std::size_t best_count = 0;
    for (const auto& [id, count] : sole_counts) {
        if (count > best_count || (count == best_count && best && id < *best)) {
            best = id;
            best_count = count;
        }
    }
    return best;
}

}  // namespace mosa::detail
