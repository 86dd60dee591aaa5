#include "mosa/hyperheuristic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mosa {

HeuristicPool::HeuristicPool(int heuristic_count, double p_min_in, double alpha_in)
    : count(heuristic_count),
      p_min(p_min_in),
      alpha(alpha_in),
      q(static_cast<std::size_t>(heuristic_count), 1.0),
      w(static_cast<std::size_t>(heuristic_count), 0.0) {
    if (heuristic_count < 1) {
        throw std::invalid_argument("HeuristicPool: need at least one heuristic");
    }
    if (p_min < 0.0 || p_min > 1.0 / heuristic_count) {
        throw std::invalid_argument("HeuristicPool: p_min outside (0, 1/count]");
    }
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("HeuristicPool: alpha outside [0, 1]");
    }
}

double assign_credit(const EpochSnapshot& prev, const EpochSnapshot& curr,
                     double hv_true) {
    if (curr.iter_index <= prev.iter_index) {
        throw std::invalid_argument("assign_credit: epochs out of order");
    }
    if (hv_true <= 0.0) {
        throw std::invalid_argument("assign_credit: hv_true must be positive");
    }
    if (curr.member_ids.empty()) {
        throw std::logic_error("assign_credit: empty Pareto front");
    }

    std::size_t common = 0;
    {
        auto pi = prev.member_ids.begin();
        auto ci = curr.member_ids.begin();
        while (pi != prev.member_ids.end() && ci != curr.member_ids.end()) {
            if (*pi < *ci) {
                ++pi;
            } else if (*ci < *pi) {
                ++ci;
            } else {
                ++common;
                ++pi;
                ++ci;
            }
        }
    }
    double new_fraction =
        static_cast<double>(curr.member_ids.size() - common) /
        static_cast<double>(curr.member_ids.size());
    double hv_gain = std::max(0.0, curr.hv - prev.hv) / hv_true;
    double gap = static_cast<double>(curr.iter_index - prev.iter_index);
    double emphasis = std::exp(static_cast<double>(curr.iter_index) /
                               static_cast<double>(curr.total_iters));
    return emphasis * (hv_gain + new_fraction) / gap;
}

void update_quality(HeuristicPool& pool, double credit) {
    if (!pool.last_chosen) {
        throw std::logic_error("update_quality: no heuristic was chosen");
    }
    double& q = pool.q[static_cast<std::size_t>(*pool.last_chosen)];
    q = pool.alpha * q + (1.0 - pool.alpha) * credit;
    ++pool.epoch;
}

std::vector<double> selection_weights(const HeuristicPool& pool) {
    double total = std::accumulate(pool.q.begin(), pool.q.end(), 0.0);
    std::vector<double> w(pool.q.size());
    if (total <= 0.0) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
        return w;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = pool.p_min + (1.0 - pool.p_min) * pool.q[i] / total;
    }
    return w;
}

int select(HeuristicPool& pool, Rng& rng) {
    pool.w = selection_weights(pool);
    double total = std::accumulate(pool.w.begin(), pool.w.end(), 0.0);
    double ticket = rng.uniform01() * total;
    int chosen = pool.count - 1;
    double cumulative = 0.0;
    for (int i = 0; i < pool.count; ++i) {
        cumulative += pool.w[static_cast<std::size_t>(i)];
        if (ticket < cumulative) {
            chosen = i;
            break;
        }
    }
    pool.last_chosen = chosen;
    return chosen;
}

}  // namespace mosa
