#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mosa/rng.hpp"

namespace mosa {

// Probability-matching state over the low-level heuristics: quality per
// heuristic, the weights derived from it, and the bookkeeping needed to pay
// credit to the previously chosen heuristic at the next epoch.
struct HeuristicPool {
    explicit HeuristicPool(int heuristic_count = 4, double p_min_in = 0.1,
                           double alpha_in = 0.5);

    int count;
    double p_min;   // exploration floor, in (0, 1/count]
    double alpha;   // forgetting factor in [0, 1]
    std::vector<double> q;  // qualities, start at 1 so initial weights are equal
    std::vector<double> w;  // weights from the last selection_weights call
    std::optional<int> last_chosen;
    int epoch = 0;
};

// State of the Pareto front at one hyper-heuristic epoch.
struct EpochSnapshot {
    std::uint64_t iter_index = 0;   // iterations performed when taken
    std::uint64_t total_iters = 0;  // run budget
    double hv = 0.0;                // front hypervolume fraction
    std::vector<std::uint64_t> member_ids;  // sorted archive member ids
};

// Credit for the interval between two epochs: the hypervolume increment
// normalized by hv_true plus the fraction of front members new since the
// previous epoch, per iteration, scaled by e^(iter_index/total) so late
// progress counts for more. The increment is clamped below at zero.
double assign_credit(const EpochSnapshot& prev, const EpochSnapshot& curr,
                     double hv_true);

// q[last_chosen] <- alpha * q[last_chosen] + (1 - alpha) * credit; all other
// qualities unchanged. Advances the epoch counter.
void update_quality(HeuristicPool& pool, double credit);

// w_i = p_min + (1 - p_min) * q_i / sum(q). The weights do not sum to 1;
// select() normalizes them implicitly.
std::vector<double> selection_weights(const HeuristicPool& pool);

// Roulette-wheel draw proportional to the weights; records last_chosen.
int select(HeuristicPool& pool, Rng& rng);

}  // namespace mosa
