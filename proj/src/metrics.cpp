#include "mosa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mosa {

namespace {

double cuboid_volume(const ReferencePoint& ref) {
    double v = 1.0;
    for (double r : ref) v *= r;
    return v;
}

void check_bounded(std::span<const ObjectiveVector> front,
                   const ReferencePoint& ref) {
    for (const ObjectiveVector& p : front) {
        if (p.size() != ref.size()) {
            throw std::invalid_argument("hv: dimension mismatch with reference");
        }
        for (std::size_t i = 0; i < ref.size(); ++i) {
            if (p[i] > ref[i]) {
                throw std::invalid_argument(
                    "hv: front point not dominated by the reference point");
            }
        }
    }
}

bool dominates_point(const ObjectiveVector& p, std::span<const double> s) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > s[i]) return false;
    }
    return true;
}

// Sorted copy by f1 ascending with dominated points dropped; the survivors
// are strictly decreasing in f2, which makes the slab sum below exact.
std::vector<ObjectiveVector> staircase_2d(std::span<const ObjectiveVector> front) {
    std::vector<ObjectiveVector> pts(front.begin(), front.end());
    std::sort(pts.begin(), pts.end());
    std::vector<ObjectiveVector> stairs;
    for (ObjectiveVector& p : pts) {
        if (!stairs.empty() && p[1] >= stairs.back()[1]) continue;
        stairs.push_back(std::move(p));
    }
    return stairs;
}

}  // namespace

double hv_exact_2d(std::span<const ObjectiveVector> front,
                   const ReferencePoint& ref) {
    if (ref.size() != 2) {
        throw std::invalid_argument("hv_exact_2d: needs exactly 2 objectives");
    }
    if (front.empty()) return 0.0;
    check_bounded(front, ref);

    std::vector<ObjectiveVector> stairs = staircase_2d(front);
    double area = 0.0;
    for (std::size_t i = 0; i < stairs.size(); ++i) {
        double right = i + 1 < stairs.size() ? stairs[i + 1][0] : ref[0];
        area += (right - stairs[i][0]) * (ref[1] - stairs[i][1]);
    }
    return area / cuboid_volume(ref);
}

double hv_monte_carlo(std::span<const ObjectiveVector> front,
                      const ReferencePoint& ref, std::size_t samples, Rng& rng) {
    if (ref.size() < 2) {
        throw std::invalid_argument("hv_monte_carlo: needs at least 2 objectives");
    }
    if (samples < 1) throw std::invalid_argument("hv_monte_carlo: samples < 1");
    if (front.empty()) return 0.0;
    check_bounded(front, ref);

    const std::size_t n = ref.size();
    std::vector<double> sample(n);
    std::size_t dominated = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < n; ++i) sample[i] = rng.uniform01() * ref[i];
        for (const ObjectiveVector& p : front) {
            if (dominates_point(p, sample)) {
                ++dominated;
                break;
            }
        }
    }
    return static_cast<double>(dominated) / static_cast<double>(samples);
}

double hv(std::span<const ObjectiveVector> front, const ReferencePoint& ref,
          std::size_t samples, Rng& rng) {
    return ref.size() == 2 ? hv_exact_2d(front, ref)
                           : hv_monte_carlo(front, ref, samples, rng);
}

std::vector<double> hv_contributions(std::span<const ObjectiveVector> front,
                                     const ReferencePoint& ref,
                                     std::size_t samples, Rng& rng) {
    for (std::size_t i = 0; i < front.size(); ++i) {
        for (std::size_t j = i + 1; j < front.size(); ++j) {
            if (front[i] == front[j]) {
                throw std::invalid_argument(
                    "hv_contributions: duplicate objective vectors");
            }
        }
    }
    check_bounded(front, ref);
    std::vector<double> out(front.size(), 0.0);
    if (front.empty()) return out;

    if (ref.size() == 2) {
        // Exclusive rectangle between sorted neighbors.
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a] < front[b];
        });
        double volume = cuboid_volume(ref);
        for (std::size_t k = 0; k < order.size(); ++k) {
            const ObjectiveVector& p = front[order[k]];
            double right = k + 1 < order.size() ? front[order[k + 1]][0] : ref[0];
            double above = k > 0 ? front[order[k - 1]][1] : ref[1];
            double width = std::max(0.0, right - p[0]);
            double height = std::max(0.0, above - p[1]);
            out[order[k]] = width * height / volume;
        }
        return out;
    }

    const std::size_t n = ref.size();
    std::vector<double> sample(n);
    std::vector<std::size_t> sole_counts(front.size(), 0);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < n; ++i) sample[i] = rng.uniform01() * ref[i];
        std::size_t count = 0;
        std::size_t sole = 0;
        for (std::size_t m = 0; m < front.size() && count < 2; ++m) {
            if (dominates_point(front[m], sample)) {
                ++count;
                sole = m;
            }
        }
        if (count == 1) ++sole_counts[sole];
    }
    for (std::size_t m = 0; m < front.size(); ++m) {
        out[m] = static_cast<double>(sole_counts[m]) / static_cast<double>(samples);
    }
    return out;
}

std::vector<double> crowding_distances(std::span<const ObjectiveVector> front) {
    const std::size_t m = front.size();
    if (m == 0) return {};
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (m <= 2) return std::vector<double>(m, kInf);

    const std::size_t n = front[0].size();
    std::vector<double> dist(m, 0.0);
    std::vector<std::size_t> order(m);
    for (std::size_t obj = 0; obj < n; ++obj) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a][obj] < front[b][obj];
        });
        double span = front[order[m - 1]][obj] - front[order[0]][obj];
        dist[order[0]] = kInf;
        dist[order[m - 1]] = kInf;
        if (span < 1e-300) continue;  // objective carries no spread
        for (std::size_t k = 1; k + 1 < m; ++k) {
            if (std::isinf(dist[order[k]])) continue;
            dist[order[k]] +=
                (front[order[k + 1]][obj] - front[order[k - 1]][obj]) / span;
        }
    }
    return dist;
}

double igd(std::span<const ObjectiveVector> front,
           std::span<const ObjectiveVector> reference_front) {
    if (front.empty() || reference_front.empty()) {
        throw std::invalid_argument("igd: empty front");
    }
    double total = 0.0;
    for (const ObjectiveVector& ref_pt : reference_front) {
        double best = std::numeric_limits<double>::infinity();
        for (const ObjectiveVector& p : front) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < ref_pt.size(); ++i) {
                double d = ref_pt[i] - p[i];
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference_front.size());
}

}  // namespace mosa
