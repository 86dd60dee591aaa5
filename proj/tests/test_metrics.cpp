#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mosa/metrics.hpp"

using namespace mosa;

namespace {

// Random mutually non-dominated 2-D front: sorted ascending in f1 with f2
// strictly decreasing.
std::vector<ObjectiveVector> random_front_2d(Rng& rng, std::size_t size) {
    std::vector<double> f1(size), f2(size);
    for (std::size_t i = 0; i < size; ++i) {
        f1[i] = rng.uniform01();
        f2[i] = rng.uniform01();
    }
    std::sort(f1.begin(), f1.end());
    std::sort(f2.rbegin(), f2.rend());
    std::vector<ObjectiveVector> front;
    for (std::size_t i = 0; i < size; ++i) front.push_back({f1[i], f2[i]});
    return front;
}

}  // namespace

TEST_CASE("exact 2-D hypervolume on hand-checked fronts") {
    ReferencePoint ref{1.0, 1.0};
    CHECK(hv_exact_2d(std::vector<ObjectiveVector>{{0.0, 0.0}}, ref) ==
          doctest::Approx(1.0));
    CHECK(hv_exact_2d(std::vector<ObjectiveVector>{}, ref) == 0.0);
    CHECK(hv_exact_2d(std::vector<ObjectiveVector>{{0.0, 0.5}, {0.5, 0.0}}, ref) ==
          doctest::Approx(0.75));
}

TEST_CASE("hypervolume rejects points beyond the reference") {
    ReferencePoint ref{1.0, 1.0};
    CHECK_THROWS_AS(
        hv_exact_2d(std::vector<ObjectiveVector>{{2.0, 0.0}}, ref),
        std::invalid_argument);
}

TEST_CASE("monte-carlo hypervolume trivial fronts") {
    Rng rng(1);
    ReferencePoint ref{2.0, 2.0, 2.0};
    CHECK(hv_monte_carlo(std::vector<ObjectiveVector>{{0.0, 0.0, 0.0}}, ref, 2000,
                         rng) == doctest::Approx(1.0));
    CHECK(hv_monte_carlo(std::vector<ObjectiveVector>{}, ref, 2000, rng) == 0.0);
}

TEST_CASE("monte-carlo agrees with the exact 2-D value") {
    Rng rng(2);
    ReferencePoint ref{1.0, 1.0};
    std::vector<ObjectiveVector> front{{0.0, 0.5}, {0.5, 0.0}};
    double estimate = hv_monte_carlo(front, ref, 100000, rng);
    CHECK(estimate == doctest::Approx(0.75).epsilon(0.015));
}

TEST_CASE("monte-carlo within 3 binomial standard errors on random fronts") {
    Rng rng(3);
    int within = 0;
    const int trials = 30;
    for (int t = 0; t < trials; ++t) {
        auto front = random_front_2d(rng, 3 + t % 18);
        ReferencePoint ref{1.1, 1.1};
        double exact = hv_exact_2d(front, ref);
        const std::size_t n = 50000;
        double estimate = hv_monte_carlo(front, ref, n, rng);
        double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(n));
        if (std::abs(estimate - exact) <= 3.0 * se + 1e-12) ++within;
    }
    CHECK(within >= trials - 1);
}

TEST_CASE("adding a non-dominated point never decreases the exact hypervolume") {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        auto front = random_front_2d(rng, 8);
        ReferencePoint ref{1.1, 1.1};
        double base = hv_exact_2d(front, ref);
        front.push_back({rng.uniform01(), rng.uniform01()});
        CHECK(hv_exact_2d(front, ref) >= base - 1e-15);
    }
}

TEST_CASE("hypervolume contributions: values frozen from the exclusive-volume oracle") {
    Rng rng(5);
    // Oracle: HV(front) - HV(front without i), via the exact 2-D routine.
    auto oracle = [](std::vector<ObjectiveVector> front, const ReferencePoint& ref) {
        std::vector<double> out;
        double full = hv_exact_2d(front, ref);
        for (std::size_t i = 0; i < front.size(); ++i) {
            std::vector<ObjectiveVector> rest = front;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(full - hv_exact_2d(rest, ref));
        }
        return out;
    };

    {
        std::vector<ObjectiveVector> front{{0.0, 1.0}, {1.0, 0.0}};
        ReferencePoint ref{2.0, 2.0};
        auto expected = oracle(front, ref);
        CHECK(expected[0] == doctest::Approx(0.25));
        CHECK(expected[1] == doctest::Approx(0.25));
        auto got = hv_contributions(front, ref, 1000, rng);
        CHECK(got[0] == doctest::Approx(expected[0]));
        CHECK(got[1] == doctest::Approx(expected[1]));
    }
    {
        std::vector<ObjectiveVector> front{{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}};
        ReferencePoint ref{3.0, 3.0};
        auto got = hv_contributions(front, ref, 1000, rng);
        CHECK(got[1] == doctest::Approx(1.0 / 9.0));
        auto expected = oracle(front, ref);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(got[i] == doctest::Approx(expected[i]));
        }
    }
    {
        // Singleton front: its own full hypervolume.
        std::vector<ObjectiveVector> front{{0.5, 0.5}};
        ReferencePoint ref{1.0, 1.0};
        auto got = hv_contributions(front, ref, 1000, rng);
        CHECK(got[0] == doctest::Approx(hv_exact_2d(front, ref)));
    }
}

TEST_CASE("contributions on random fronts match the oracle and stay below full HV") {
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        auto front = random_front_2d(rng, 3 + t % 10);
        ReferencePoint ref{1.2, 1.2};
        auto got = hv_contributions(front, ref, 1000, rng);
        double full = hv_exact_2d(front, ref);
        double total = 0.0;
        for (std::size_t i = 0; i < front.size(); ++i) {
            std::vector<ObjectiveVector> rest = front;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK(got[i] ==
                  doctest::Approx(full - hv_exact_2d(rest, ref)).epsilon(1e-12));
            total += got[i];
        }
        CHECK(total <= full + 1e-12);
    }
}

TEST_CASE("monte-carlo contributions approximate the 3-D exclusive volumes") {
    Rng rng(7);
    // Symmetric 3-point front: equal exclusive boxes by symmetry.
    std::vector<ObjectiveVector> front{{0.0, 0.5, 1.0}, {0.5, 1.0, 0.0},
                                       {1.0, 0.0, 0.5}};
    ReferencePoint ref{1.5, 1.5, 1.5};
    auto got = hv_contributions(front, ref, 200000, rng);
    CHECK(got[0] == doctest::Approx(got[1]).epsilon(0.08));
    CHECK(got[1] == doctest::Approx(got[2]).epsilon(0.08));
    double total = got[0] + got[1] + got[2];
    Rng rng2(8);
    CHECK(total <= hv_monte_carlo(front, ref, 200000, rng2) + 0.01);
}

TEST_CASE("contributions reject duplicates") {
    Rng rng(9);
    std::vector<ObjectiveVector> front{{0.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(hv_contributions(front, ReferencePoint{2, 2}, 100, rng),
                    std::invalid_argument);
}

TEST_CASE("crowding distances per the boundary-infinite rule") {
    std::vector<ObjectiveVector> front{{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}};
    auto d = crowding_distances(front);
    CHECK(std::isinf(d[0]));
    CHECK(d[1] == doctest::Approx(2.0));
    CHECK(std::isinf(d[2]));

    auto two = crowding_distances(
        std::vector<ObjectiveVector>{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(std::isinf(two[0]));
    CHECK(std::isinf(two[1]));

    auto one = crowding_distances(std::vector<ObjectiveVector>{{0.5, 0.5}});
    REQUIRE(one.size() == 1);
    CHECK(std::isinf(one[0]));
}

TEST_CASE("crowding distance is invariant under per-objective affine rescaling") {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        auto front = random_front_2d(rng, 9);
        auto base = crowding_distances(front);
        std::vector<ObjectiveVector> scaled = front;
        for (ObjectiveVector& p : scaled) {
            p[0] = 3.5 * p[0] - 1.0;
            p[1] = 0.25 * p[1] + 7.0;
        }
        auto rescaled = crowding_distances(scaled);
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (std::isinf(base[i])) {
                CHECK(std::isinf(rescaled[i]));
            } else {
                CHECK(rescaled[i] == doctest::Approx(base[i]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("igd examples and properties") {
    std::vector<ObjectiveVector> front{{0.0, 0.0}};
    std::vector<ObjectiveVector> star{{1.0, 0.0}, {0.0, 1.0}};
    CHECK(igd(front, star) == doctest::Approx(1.0));

    CHECK(igd(star, star) == 0.0);

    // A front shifted by d in one coordinate is at most d away.
    Rng rng(11);
    auto pf = random_front_2d(rng, 15);
    std::vector<ObjectiveVector> shifted = pf;
    for (ObjectiveVector& p : shifted) p[0] += 0.037;
    CHECK(igd(shifted, pf) <= 0.037 + 1e-12);
    CHECK(igd(shifted, pf) > 0.0);

    CHECK_THROWS_AS(igd({}, star), std::invalid_argument);
}
