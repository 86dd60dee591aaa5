#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mosa/core.hpp"
#include "mosa/detail/hv_tracker.hpp"
#include "mosa/hyperheuristic.hpp"
#include "mosa/metrics.hpp"
#include "mosa/problems.hpp"
#include "mosa/rng.hpp"

namespace mosa {

inline constexpr int kNumHeuristics = 4;

struct AnnealConfig {
    double t_max = 100.0;
    double t_min = 1e-5;
    double cool_alpha = 0.8;
    std::uint64_t total_iters = 0;
    double move_scale = 0.1;  // step sigma as a fraction of the variable range
    // Fraction of proposals that perturb every variable at once instead of a
    // single one. Whole-vector kicks let the annealing walk cross ridges that
    // single-coordinate moves cannot (any lone worsening is dominated by the
    // current solution and diverted to Re-seed).
    double kick_prob = 0.35;
    // Fraction of the remaining proposals that redraw the chosen variable
    // uniformly from its box instead of stepping locally, so disconnected
    // front regions stay reachable after the temperature has dropped.
    double jump_prob = 0.1;
    std::size_t mc_samples_credit = 10000;
    std::uint64_t seed = 0;
    bool hh_enabled = true;
    std::optional<int> fixed_heuristic;  // 0-based; disables selection entirely
    double hv_true = 1.0;  // credit normalization; 1 when the true front is unknown
    std::optional<std::size_t> archive_capacity;
};

struct CoolingSchedule {
    int levels = 0;                      // temperature levels visited
    std::uint64_t iters_per_level = 0;
    std::uint64_t remainder = 0;         // extra iterations at the last level
    double t_max = 0.0;
    double cool_alpha = 0.0;

    double temperature(int level) const;
};

// levels is the smallest k with cool_alpha^k * t_max <= t_min; the iteration
// budget is split evenly across them with the remainder spent at the last
// level. Throws std::invalid_argument on an invalid configuration.
CoolingSchedule cooling_schedule(const AnnealConfig& config);

// Copy of `current` with one uniformly chosen variable perturbed by a
// zero-mean Gaussian step of sigma = move_scale * (ub - lb), clipped to the
// bounds, then re-evaluated.
Solution propose_neighbor(const Solution& current, const ProblemDef& problem,
                          double move_scale, Rng& rng);

// Copy of `current` with the chosen variable redrawn uniformly in its box.
Solution propose_jump(const Solution& current, const ProblemDef& problem,
                      Rng& rng);

// Copy of `current` with every variable perturbed that way.
Solution propose_kick(const Solution& current, const ProblemDef& problem,
                      double move_scale, Rng& rng);

// Accepts the candidate dominated by `dominators` with probability
// 1 / (1 + exp(mean_dom / temperature)).
bool sa_accept(const Solution& candidate, std::span<const Solution> dominators,
               const ObjectiveRanges& ranges, double temperature, Rng& rng);

// Re-seed heuristics. The first two consider only archive members that
// dominate the candidate; finite ties break to the lowest archive index.
const Solution& heuristic_min_dom(const ParetoArchive& archive,
                                  const Solution& candidate,
                                  const ObjectiveRanges& ranges);
const Solution& heuristic_max_dom(const ParetoArchive& archive,
                                  const Solution& candidate,
                                  const ObjectiveRanges& ranges);
// Largest exclusive hypervolume, exact for 2 objectives, Monte-Carlo above.
const Solution& heuristic_max_hv_contrib(const ParetoArchive& archive,
                                         const ReferencePoint& ref,
                                         std::size_t samples, Rng& rng);
// Largest crowding distance; ties among boundary (infinite) members break
// uniformly at random.
const Solution& heuristic_max_crowding(const ParetoArchive& archive, Rng& rng);

struct BranchCounters {
    std::uint64_t update = 0;        // candidate dominated archive members
    std::uint64_t nondominated = 0;  // candidate joined the front
    std::uint64_t reseed = 0;        // dominated by archive and by current
    std::uint64_t annealing = 0;     // dominated by archive, SA test on current

    std::uint64_t total() const {
        return update + nondominated + reseed + annealing;
    }
};

struct EpochRecord {
    int epoch = 0;                 // 1-based re-seed epoch
    std::uint64_t iter_index = 0;  // iterations performed at the epoch
    int chosen = 0;                // heuristic applied, 0-based
    double credit = 0.0;           // credit paid to the previous heuristic
    std::array<double, kNumHeuristics> q{};
    std::array<double, kNumHeuristics> w{};
};

struct SeriesRow {
    int epoch = 0;
    std::uint64_t iter = 0;
    double hv = 0.0;
    std::size_t archive_size = 0;
    double temperature = 0.0;
};

struct RunResult {
    ParetoArchive archive;
    std::vector<EpochRecord> trace;
    std::vector<SeriesRow> series;
    BranchCounters counters;
    std::uint64_t evaluations = 0;
    HeuristicPool pool{kNumHeuristics};
};

// One annealing run, stepwise. Construction evaluates the initial samples and
// seeds the archive with their non-dominated subset.
class MosaRun {
public:
    MosaRun(const ProblemDef& problem, AnnealConfig config);
    // Warm start from explicit evaluated solutions (used by tests).
    MosaRun(const ProblemDef& problem, AnnealConfig config,
            std::vector<Solution> initial, std::size_t current_index);

    void step();
    void run_to_completion();
    bool finished() const { return iteration_ >= config_.total_iters; }

    // Routes an already evaluated candidate through one Update/Action cycle.
    void process_candidate(Solution candidate);

    const ParetoArchive& archive() const { return archive_; }
    const Solution& current() const { return current_; }
    const BranchCounters& counters() const { return counters_; }
    const HeuristicPool& pool() const { return pool_; }
    std::uint64_t evaluations() const { return evaluations_; }
    std::uint64_t iteration() const { return iteration_; }
    double temperature() const { return temperature_; }

    RunResult take_result() &&;

private:
    void insert_tracked(Solution s);
    void reseed(const Solution& candidate,
                std::span<const std::size_t> dominator_indices,
                const ObjectiveRanges& ranges);
    void sa_on_candidate(const Solution& candidate,
                         std::span<const std::size_t> dominator_indices,
                         const ObjectiveRanges& ranges);
    EpochSnapshot snapshot_front(double hv_value) const;
    // Sample box from the current front envelope; rebuilds when a member
    // outgrows the box or the envelope drifts past the hysteresis band.
    bool refresh_sample_box(bool force);

    const ProblemDef* problem_;
    AnnealConfig config_;
    CoolingSchedule schedule_;
    Rng rng_;
    ParetoArchive archive_;
    Solution current_;
    detail::HvSampleTracker tracker_;
    HeuristicPool pool_{kNumHeuristics};
    BranchCounters counters_;
    std::vector<EpochRecord> trace_;
    std::vector<SeriesRow> series_;
    std::uint64_t iteration_ = 0;
    std::uint64_t evaluations_ = 0;
    double temperature_ = 0.0;
    int epoch_count_ = 0;
    std::optional<EpochSnapshot> prev_epoch_;
};

// Full run per the configured schedule; deterministic for a fixed seed.
RunResult run(const ProblemDef& problem, const AnnealConfig& config);

inline constexpr std::size_t kInitSamples = 10;

}  // namespace mosa
