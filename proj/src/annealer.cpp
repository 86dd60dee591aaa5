#include "mosa/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mosa {

namespace {

void validate(const AnnealConfig& config) {
    if (!(config.t_min > 0.0) || !(config.t_min < config.t_max)) {
        throw std::invalid_argument("AnnealConfig: need 0 < t_min < t_max");
    }
    if (!(config.cool_alpha > 0.0) || !(config.cool_alpha < 1.0)) {
        throw std::invalid_argument("AnnealConfig: cool_alpha outside (0, 1)");
    }
    if (config.total_iters == 0) {
        throw std::invalid_argument("AnnealConfig: total_iters must be positive");
    }
    if (config.move_scale < 0.0) {
        throw std::invalid_argument("AnnealConfig: negative move_scale");
    }
    if (config.kick_prob < 0.0 || config.kick_prob > 1.0) {
        throw std::invalid_argument("AnnealConfig: kick_prob outside [0, 1]");
    }
    if (config.jump_prob < 0.0 || config.jump_prob > 1.0) {
        throw std::invalid_argument("AnnealConfig: jump_prob outside [0, 1]");
    }
    if (config.mc_samples_credit == 0) {
        throw std::invalid_argument("AnnealConfig: mc_samples_credit must be positive");
    }
    if (!config.hh_enabled && !config.fixed_heuristic) {
        throw std::invalid_argument(
            "AnnealConfig: disabling the hyper-heuristic requires a fixed heuristic");
    }
    if (config.fixed_heuristic &&
        (*config.fixed_heuristic < 0 || *config.fixed_heuristic >= kNumHeuristics)) {
        throw std::invalid_argument("AnnealConfig: fixed_heuristic out of range");
    }
    if (config.hv_true <= 0.0) {
        throw std::invalid_argument("AnnealConfig: hv_true must be positive");
    }
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(z)); }

double mean_domination(const ParetoArchive& archive,
                       std::span<const std::size_t> dominator_indices,
                       const Solution& candidate, const ObjectiveRanges& ranges) {
    double total = 0.0;
    for (std::size_t idx : dominator_indices) {
        total += domination_amount(archive.members()[idx].f, candidate.f, ranges);
    }
    return total / static_cast<double>(dominator_indices.size());
}

std::vector<std::size_t> dominating_indices(const ParetoArchive& archive,
                                            const Solution& candidate) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < archive.size(); ++i) {
        if (compare(archive.members()[i].f, candidate.f) ==
            DominanceRelation::Dominates) {
            out.push_back(i);
        }
    }
    return out;
}

template <typename Better>
const Solution& pick_by_domination(const ParetoArchive& archive,
                                   std::span<const std::size_t> dominator_indices,
                                   const Solution& candidate,
                                   const ObjectiveRanges& ranges, Better better) {
    if (dominator_indices.empty()) {
        throw std::logic_error("re-seed heuristic: no dominating member");
    }
    std::size_t best = dominator_indices[0];
    double best_dom =
        domination_amount(archive.members()[best].f, candidate.f, ranges);
    for (std::size_t idx : dominator_indices.subspan(1)) {
        double dom = domination_amount(archive.members()[idx].f, candidate.f, ranges);
        if (better(dom, best_dom)) {
            best = idx;
            best_dom = dom;
        }
    }
    return archive.members()[best];
}

}  // namespace

double CoolingSchedule::temperature(int level) const {
    return std::pow(cool_alpha, level) * t_max;
}

CoolingSchedule cooling_schedule(const AnnealConfig& config) {
    validate(config);
    CoolingSchedule schedule;
    schedule.t_max = config.t_max;
    schedule.cool_alpha = config.cool_alpha;
    int k = 0;
    while (std::pow(config.cool_alpha, k) * config.t_max > config.t_min) ++k;
    schedule.levels = k;
    schedule.iters_per_level = config.total_iters / static_cast<std::uint64_t>(k);
    schedule.remainder =
        config.total_iters - schedule.iters_per_level * static_cast<std::uint64_t>(k);
    if (schedule.iters_per_level == 0) {
        throw std::invalid_argument(
            "AnnealConfig: fewer iterations than temperature levels");
    }
    return schedule;
}

Solution propose_neighbor(const Solution& current, const ProblemDef& problem,
                          double move_scale, Rng& rng) {
    Solution neighbor;
    neighbor.x = current.x;
    std::size_t var = rng.uniform_index(neighbor.x.size());
    double lo = problem.lower[var];
    double hi = problem.upper[var];
    double step = rng.gaussian() * move_scale * (hi - lo);
    neighbor.x[var] = std::clamp(neighbor.x[var] + step, lo, hi);
    neighbor.f = problem.evaluate(neighbor.x);
    return neighbor;
}

// One uniformly chosen variable redrawn uniformly from its box.
Solution propose_jump(const Solution& current, const ProblemDef& problem,
                      Rng& rng) {
    Solution neighbor;
    neighbor.x = current.x;
    std::size_t var = rng.uniform_index(neighbor.x.size());
    neighbor.x[var] = rng.uniform(problem.lower[var], problem.upper[var]);
    neighbor.f = problem.evaluate(neighbor.x);
    return neighbor;
}

Solution propose_kick(const Solution& current, const ProblemDef& problem,
                      double move_scale, Rng& rng) {
    Solution neighbor;
    neighbor.x = current.x;
    for (std::size_t var = 0; var < neighbor.x.size(); ++var) {
        double lo = problem.lower[var];
        double hi = problem.upper[var];
        double step = rng.gaussian() * move_scale * (hi - lo);
        neighbor.x[var] = std::clamp(neighbor.x[var] + step, lo, hi);
    }
    neighbor.f = problem.evaluate(neighbor.x);
    return neighbor;
}

bool sa_accept(const Solution& candidate, std::span<const Solution> dominators,
               const ObjectiveRanges& ranges, double temperature, Rng& rng) {
    if (dominators.empty()) {
        throw std::logic_error("sa_accept: needs at least one dominator");
    }
    double total = 0.0;
    for (const Solution& d : dominators) {
        total += domination_amount(d.f, candidate.f, ranges);
    }
    double mean = total / static_cast<double>(dominators.size());
    return rng.uniform01() < sigmoid(mean / temperature);
}

const Solution& heuristic_min_dom(const ParetoArchive& archive,
                                  const Solution& candidate,
                                  const ObjectiveRanges& ranges) {
    auto dominators = dominating_indices(archive, candidate);
    return pick_by_domination(archive, dominators, candidate, ranges,
                              [](double a, double b) { return a < b; });
}

const Solution& heuristic_max_dom(const ParetoArchive& archive,
                                  const Solution& candidate,
                                  const ObjectiveRanges& ranges) {
    auto dominators = dominating_indices(archive, candidate);
    return pick_by_domination(archive, dominators, candidate, ranges,
                              [](double a, double b) { return a > b; });
}

const Solution& heuristic_max_hv_contrib(const ParetoArchive& archive,
                                         const ReferencePoint& ref,
                                         std::size_t samples, Rng& rng) {
    if (archive.empty()) {
        throw std::logic_error("heuristic_max_hv_contrib: empty archive");
    }
    std::vector<ObjectiveVector> objs;
    objs.reserve(archive.size());
    for (const Solution& s : archive.members()) objs.push_back(s.f);
    std::vector<double> contrib = hv_contributions(objs, ref, samples, rng);
    std::size_t best = 0;
    for (std::size_t i = 1; i < contrib.size(); ++i) {
        if (contrib[i] > contrib[best]) best = i;
    }
    return archive.members()[best];
}

const Solution& heuristic_max_crowding(const ParetoArchive& archive, Rng& rng) {
    if (archive.empty()) {
        throw std::logic_error("heuristic_max_crowding: empty archive");
    }
    std::vector<ObjectiveVector> objs;
    objs.reserve(archive.size());
    for (const Solution& s : archive.members()) objs.push_back(s.f);
    std::vector<double> crowd = crowding_distances(objs);

    std::vector<std::size_t> infinite;
    for (std::size_t i = 0; i < crowd.size(); ++i) {
        if (std::isinf(crowd[i])) infinite.push_back(i);
    }
    if (!infinite.empty()) {
        return archive.members()[infinite[rng.uniform_index(infinite.size())]];
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < crowd.size(); ++i) {
        if (crowd[i] > crowd[best]) best = i;
    }
    return archive.members()[best];
}

MosaRun::MosaRun(const ProblemDef& problem, AnnealConfig config)
    : problem_(&problem),
      config_(config),
      schedule_(cooling_schedule(config)),
      rng_(config.seed),
      archive_(),
      tracker_(static_cast<std::size_t>(problem.n_objs), config.mc_samples_credit) {
    if (config_.archive_capacity) archive_ = ParetoArchive(*config_.archive_capacity);
    temperature_ = schedule_.temperature(0);
    pool_.w = selection_weights(pool_);

    const std::size_t n = static_cast<std::size_t>(problem.n_vars);
    for (std::size_t i = 0; i < kInitSamples; ++i) {
        Solution s;
        s.x.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            s.x[v] = rng_.uniform(problem.lower[v], problem.upper[v]);
        }
        s.f = problem.evaluate(s.x);
        ++evaluations_;
        insert_tracked(std::move(s));
    }
    refresh_sample_box(true);
    current_ = archive_.members()[rng_.uniform_index(archive_.size())];
}

MosaRun::MosaRun(const ProblemDef& problem, AnnealConfig config,
                 std::vector<Solution> initial, std::size_t current_index)
    : problem_(&problem),
      config_(config),
      schedule_(cooling_schedule(config)),
      rng_(config.seed),
      archive_(),
      tracker_(static_cast<std::size_t>(problem.n_objs), config.mc_samples_credit) {
    if (initial.empty() || current_index >= initial.size()) {
        throw std::invalid_argument("MosaRun: bad warm-start state");
    }
    if (config_.archive_capacity) archive_ = ParetoArchive(*config_.archive_capacity);
    temperature_ = schedule_.temperature(0);
    pool_.w = selection_weights(pool_);
    current_ = initial[current_index];
    for (Solution& s : initial) insert_tracked(std::move(s));
    refresh_sample_box(true);
}

void MosaRun::insert_tracked(Solution s) {
    ObjectiveVector objs = s.f;
    InsertOutcome out = archive_.insert(std::move(s));
    if (out.inserted) {
        tracker_.add_member(out.inserted_id, objs);
    }
    for (const auto& [id, removed] : out.removed) {
        tracker_.remove_member(id, removed.f);
    }
}

void MosaRun::step() {
    std::uint64_t level = iteration_ / schedule_.iters_per_level;
    level = std::min<std::uint64_t>(level,
                                    static_cast<std::uint64_t>(schedule_.levels - 1));
    temperature_ = schedule_.temperature(static_cast<int>(level));
    ++iteration_;

    double draw = rng_.uniform01();
    Solution candidate;
    if (draw < config_.kick_prob) {
        candidate = propose_kick(current_, *problem_, config_.move_scale, rng_);
    } else if (draw < config_.kick_prob +
                          (1.0 - config_.kick_prob) * config_.jump_prob) {
        candidate = propose_jump(current_, *problem_, rng_);
    } else {
        candidate = propose_neighbor(current_, *problem_, config_.move_scale, rng_);
    }
    ++evaluations_;
    process_candidate(std::move(candidate));
}

void MosaRun::run_to_completion() {
    while (!finished()) step();
}

void MosaRun::process_candidate(Solution candidate) {
    InsertOutcome out = archive_.insert(candidate);

    switch (out.relation) {
        case DominanceRelation::Dominates: {
            ++counters_.update;
            tracker_.add_member(out.inserted_id, candidate.f);
            for (const auto& [id, removed] : out.removed) {
                tracker_.remove_member(id, removed.f);
            }
            current_ = std::move(candidate);
            break;
        }
        case DominanceRelation::MutuallyNonDominated: {
            ++counters_.nondominated;
            if (out.inserted) {
                tracker_.add_member(out.inserted_id, candidate.f);
                for (const auto& [id, removed] : out.removed) {
                    tracker_.remove_member(id, removed.f);
                }
            }
            current_ = std::move(candidate);
            break;
        }
        case DominanceRelation::DominatedBy: {
            ObjectiveRanges ranges =
                objective_ranges_with(archive_.members(), candidate);
            bool dominated_by_current =
                compare(candidate.f, current_.f) == DominanceRelation::DominatedBy;
            if (dominated_by_current) {
                ++counters_.reseed;
                reseed(candidate, out.dominator_indices, ranges);
            } else {
                ++counters_.annealing;
                sa_on_candidate(candidate, out.dominator_indices, ranges);
            }
            break;
        }
        case DominanceRelation::Equal:
            throw std::logic_error("archive insert never reports Equal");
    }
}

EpochSnapshot MosaRun::snapshot_front(double hv_value) const {
    EpochSnapshot snap;
    snap.iter_index = iteration_;
    snap.total_iters = config_.total_iters;
    snap.hv = hv_value;
    snap.member_ids.assign(archive_.ids().begin(), archive_.ids().end());
    return snap;
}

bool MosaRun::refresh_sample_box(bool force) {
    const std::size_t n = static_cast<std::size_t>(problem_->n_objs);
    std::vector<double> lo(n), hi(n);
    bool first = true;
    for (const Solution& m : archive_.members()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (first || m.f[i] < lo[i]) lo[i] = m.f[i];
            if (first || m.f[i] > hi[i]) hi[i] = m.f[i];
        }
        first = false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        // 10% beyond the envelope on the worse side, unit margin when flat;
        // the box floor stays at the origin for nonnegative objectives.
        double pushed = hi[i] + 0.1 * std::abs(hi[i]);
        hi[i] = pushed == hi[i] ? hi[i] + 1.0 : pushed;
        lo[i] = std::min(0.0, lo[i]);
    }

    bool rebuild = force || !tracker_.has_box();
    if (!rebuild) {
        auto cur_lo = tracker_.box_lo();
        auto cur_hi = tracker_.box_hi();
        for (std::size_t i = 0; i < n && !rebuild; ++i) {
            double band = 0.15 * (hi[i] - lo[i]);
            // A member past the box edge always forces a redraw; otherwise
            // tolerate drift inside the hysteresis band.
            rebuild = hi[i] > cur_hi[i] || lo[i] < cur_lo[i] ||
                      cur_hi[i] - hi[i] > band || lo[i] - cur_lo[i] > band;
        }
    }
    if (rebuild) tracker_.rebuild(lo, hi, archive_.members(), archive_.ids(), rng_);
    return rebuild;
}

void MosaRun::reseed(const Solution& candidate,
                     std::span<const std::size_t> dominator_indices,
                     const ObjectiveRanges& ranges) {
    if (archive_.empty() || dominator_indices.empty()) {
        throw std::logic_error("reseed: requires a dominating archive member");
    }
    ++epoch_count_;
    double hv_epoch = tracker_.hv();
    double credit = 0.0;
    int chosen;

    if (config_.fixed_heuristic) {
        chosen = *config_.fixed_heuristic;
        if (refresh_sample_box(false)) hv_epoch = tracker_.hv();
    } else {
        // Pay the previous heuristic from the front change since the last
        // epoch; both hypervolumes in the pair share one sample box.
        EpochSnapshot curr = snapshot_front(hv_epoch);
        if (prev_epoch_) {
            credit = assign_credit(*prev_epoch_, curr, config_.hv_true);
            update_quality(pool_, credit);
        }
        chosen = select(pool_, rng_);
        if (refresh_sample_box(false)) {
            curr.hv = tracker_.hv();
            hv_epoch = curr.hv;
        }
        prev_epoch_ = std::move(curr);
    }

    EpochRecord record;
    record.epoch = epoch_count_;
    record.iter_index = iteration_;
    record.chosen = chosen;
    record.credit = credit;
    std::copy_n(pool_.q.begin(), kNumHeuristics, record.q.begin());
    std::copy_n(pool_.w.begin(), kNumHeuristics, record.w.begin());
    trace_.push_back(record);
    series_.push_back(
        {epoch_count_, iteration_, hv_epoch, archive_.size(), temperature_});

    const Solution* selected = nullptr;
    switch (chosen) {
        case 0:
            selected = &pick_by_domination(archive_, dominator_indices, candidate,
                                           ranges,
                                           [](double a, double b) { return a < b; });
            break;
        case 1:
            selected = &pick_by_domination(archive_, dominator_indices, candidate,
                                           ranges,
                                           [](double a, double b) { return a > b; });
            break;
        case 2: {
            if (problem_->n_objs == 2) {
                ReferencePoint ref(tracker_.box_hi().begin(), tracker_.box_hi().end());
                selected = &heuristic_max_hv_contrib(archive_, ref,
                                                     config_.mc_samples_credit, rng_);
            } else {
                std::size_t best = 0;
                if (auto id = tracker_.max_contribution_id()) {
                    auto ids = archive_.ids();
                    auto pos = std::lower_bound(ids.begin(), ids.end(), *id);
                    if (pos != ids.end() && *pos == *id) {
                        best = static_cast<std::size_t>(pos - ids.begin());
                    }
                }
                selected = &archive_.members()[best];
            }
            break;
        }
        case 3:
            selected = &heuristic_max_crowding(archive_, rng_);
            break;
        default:
            throw std::logic_error("reseed: heuristic index out of range");
    }

    double dom = domination_amount(selected->f, candidate.f, ranges);
    double p = sigmoid(-dom / std::max(temperature_, 1.0));
    if (rng_.uniform01() < p) {
        current_ = *selected;
    } else {
        sa_on_candidate(candidate, dominator_indices, ranges);
    }
}

void MosaRun::sa_on_candidate(const Solution& candidate,
                              std::span<const std::size_t> dominator_indices,
                              const ObjectiveRanges& ranges) {
    double mean = mean_domination(archive_, dominator_indices, candidate, ranges);
    if (rng_.uniform01() < sigmoid(mean / temperature_)) {
        current_ = candidate;
    }
}

RunResult MosaRun::take_result() && {
    RunResult result;
    result.archive = std::move(archive_);
    result.trace = std::move(trace_);
    result.series = std::move(series_);
    result.counters = counters_;
    result.evaluations = evaluations_;
    result.pool = std::move(pool_);
    return result;
}

RunResult run(const ProblemDef& problem, const AnnealConfig& config) {
    MosaRun runner(problem, config);
    runner.run_to_completion();
    return std::move(runner).take_result();
}

}  // namespace mosa
