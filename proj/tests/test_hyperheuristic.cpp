#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "mosa/hyperheuristic.hpp"

using namespace mosa;

namespace {

EpochSnapshot snap(std::uint64_t iter, std::uint64_t total, double hv,
                   std::vector<std::uint64_t> ids) {
    return EpochSnapshot{iter, total, hv, std::move(ids)};
}

}  // namespace

TEST_CASE("credit is zero when nothing changed") {
    EpochSnapshot prev = snap(100, 1000, 0.4, {1, 2, 3});
    EpochSnapshot curr = snap(110, 1000, 0.4, {1, 2, 3});
    CHECK(assign_credit(prev, curr, 0.5) == 0.0);
}

TEST_CASE("credit evaluates the documented grouping") {
    // hv gain 0.05 normalized by 0.5, plus half the front renewed, over a
    // 10-iteration gap, at the end of the budget.
    EpochSnapshot prev = snap(990, 1000, 0.40, {1, 2});
    EpochSnapshot curr = snap(1000, 1000, 0.45, {1, 9});
    double expected = std::exp(1.0) * (0.05 / 0.5 + 0.5) / 10.0;
    CHECK(assign_credit(prev, curr, 0.5) == doctest::Approx(expected));
    CHECK(expected == doctest::Approx(0.1630969097));
}

TEST_CASE("compensatory factor spans exactly [1, e]") {
    EpochSnapshot prev_early = snap(1, 1000, 0.0, {1});
    EpochSnapshot curr_early = snap(2, 1000, 0.0, {2});
    EpochSnapshot prev_late = snap(999, 1000, 0.0, {1});
    EpochSnapshot curr_late = snap(1000, 1000, 0.0, {2});
    double early = assign_credit(prev_early, curr_early, 1.0);
    double late = assign_credit(prev_late, curr_late, 1.0);
    // Identical progress (full renewal, gap 1); only the factor differs.
    CHECK(late / early == doctest::Approx(std::exp(1.0) / std::exp(2.0 / 1000.0)));
    CHECK(late == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("negative hypervolume increments are clamped") {
    EpochSnapshot prev = snap(10, 1000, 0.5, {1});
    EpochSnapshot curr = snap(20, 1000, 0.3, {1});
    CHECK(assign_credit(prev, curr, 1.0) == 0.0);
}

TEST_CASE("credit preconditions") {
    EpochSnapshot prev = snap(10, 1000, 0.5, {1});
    EpochSnapshot curr = snap(20, 1000, 0.6, {1});
    CHECK_THROWS_AS(assign_credit(curr, prev, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(assign_credit(prev, curr, 0.0), std::invalid_argument);
    EpochSnapshot empty = snap(30, 1000, 0.6, {});
    CHECK_THROWS_AS(assign_credit(prev, empty, 1.0), std::logic_error);
}

TEST_CASE("quality update follows the forgetting rule") {
    HeuristicPool pool;
    pool.last_chosen = 0;
    update_quality(pool, 0.0);
    CHECK(pool.q[0] == doctest::Approx(0.5));  // 0.5*1 + 0.5*0
    CHECK(pool.q[1] == 1.0);
    CHECK(pool.q[2] == 1.0);
    CHECK(pool.q[3] == 1.0);
    CHECK(pool.epoch == 1);

    // credit equal to the quality is a fixed point
    update_quality(pool, 0.5);
    CHECK(pool.q[0] == doctest::Approx(0.5));

    HeuristicPool full_memory(4, 0.1, 1.0);
    full_memory.last_chosen = 2;
    update_quality(full_memory, 123.0);
    CHECK(full_memory.q[2] == 1.0);

    HeuristicPool no_choice;
    CHECK_THROWS_AS(update_quality(no_choice, 1.0), std::logic_error);
}

TEST_CASE("only the chosen heuristic's quality changes") {
    Rng rng(17);
    HeuristicPool pool;
    for (int epoch = 0; epoch < 50; ++epoch) {
        std::vector<double> before = pool.q;
        int chosen = select(pool, rng);
        update_quality(pool, rng.uniform01());
        for (int i = 0; i < pool.count; ++i) {
            if (i != chosen) CHECK(pool.q[i] == before[i]);
        }
    }
}

TEST_CASE("selection weights match the probability-matching formula") {
    HeuristicPool pool;  // q = (1,1,1,1), p_min = 0.1
    auto w = selection_weights(pool);
    for (double wi : w) CHECK(wi == doctest::Approx(0.325).epsilon(1e-14));

    pool.q = {1.0, 0.0, 0.0, 0.0};
    w = selection_weights(pool);
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == doctest::Approx(0.1));
    CHECK(w[2] == doctest::Approx(0.1));
    CHECK(w[3] == doctest::Approx(0.1));

    HeuristicPool plain(4, 0.0, 0.5);
    plain.q = {2.0, 1.0, 1.0, 0.0};
    w = selection_weights(plain);
    CHECK(w[0] == doctest::Approx(0.5));
    CHECK(w[1] == doctest::Approx(0.25));
    CHECK(w[2] == doctest::Approx(0.25));
    CHECK(w[3] == doctest::Approx(0.0));
}

TEST_CASE("weights fall back to uniform when all qualities are zero") {
    HeuristicPool pool;
    pool.q = {0.0, 0.0, 0.0, 0.0};
    auto w = selection_weights(pool);
    for (double wi : w) CHECK(wi == doctest::Approx(0.25));
}

TEST_CASE("every weight keeps the exploration floor") {
    Rng rng(23);
    HeuristicPool pool;
    for (int epoch = 0; epoch < 200; ++epoch) {
        select(pool, rng);
        update_quality(pool, rng.uniform01() < 0.7 ? 0.0 : rng.uniform01());
        for (double wi : selection_weights(pool)) CHECK(wi >= pool.p_min);
        for (double qi : pool.q) CHECK(qi >= 0.0);
    }
}

TEST_CASE("roulette selection is degenerate-safe and frequency-correct") {
    {
        HeuristicPool pool;
        pool.q = {1.0, 0.0, 0.0, 0.0};
        pool.p_min = 0.0;
        Rng rng(31);
        for (int i = 0; i < 100; ++i) CHECK(select(pool, rng) == 0);
    }
    {
        // Uniform weights 0.325 each: frequencies within +-0.015 of 0.25.
        HeuristicPool pool;
        Rng rng(37);
        std::array<int, 4> counts{};
        for (int i = 0; i < 10000; ++i) ++counts[static_cast<std::size_t>(select(pool, rng))];
        for (int c : counts) {
            CHECK(std::abs(c / 10000.0 - 0.25) <= 0.015);
        }
    }
    {
        // Unnormalized weights (1.0, 0.1, 0.1, 0.1): index 0 at 1/1.3.
        HeuristicPool pool;
        pool.q = {1.0, 0.0, 0.0, 0.0};
        Rng rng(41);
        int zero = 0;
        for (int i = 0; i < 10000; ++i) {
            if (select(pool, rng) == 0) ++zero;
        }
        CHECK(std::abs(zero / 10000.0 - 1.0 / 1.3) <= 0.015);
    }
}

TEST_CASE("exploration guarantee: all heuristics show up in 200 draws") {
    // Worst-case weights (1.0, 0.1, 0.1, 0.1): the floor probability is
    // 0.1/1.3, so 200 draws miss a heuristic with probability under 1e-6.
    HeuristicPool pool;
    pool.q = {1.0, 0.0, 0.0, 0.0};
    Rng rng(43);
    std::array<bool, 4> seen{};
    for (int i = 0; i < 200; ++i) seen[static_cast<std::size_t>(select(pool, rng))] = true;
    for (bool s : seen) CHECK(s);
}

TEST_CASE("quality converges to a constant credit") {
    HeuristicPool instant(4, 0.1, 0.0);
    instant.last_chosen = 1;
    update_quality(instant, 0.7);
    CHECK(instant.q[1] == doctest::Approx(0.7));

    HeuristicPool halving;  // alpha = 0.5
    halving.last_chosen = 1;
    double target = 0.7;
    double gap = std::abs(halving.q[1] - target);
    for (int i = 0; i < 10; ++i) {
        update_quality(halving, target);
        double new_gap = std::abs(halving.q[1] - target);
        CHECK(new_gap == doctest::Approx(gap / 2.0).epsilon(1e-12));
        gap = new_gap;
    }
}

TEST_CASE("pool constructor validates its parameters") {
    CHECK_THROWS_AS(HeuristicPool(0), std::invalid_argument);
    CHECK_THROWS_AS(HeuristicPool(4, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(HeuristicPool(4, 0.1, 1.5), std::invalid_argument);
}
