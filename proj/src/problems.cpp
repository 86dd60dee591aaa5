#include "mosa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mosa::problems {

namespace {

constexpr double kPi = std::numbers::pi;

void check_bounds(std::span<const double> x, const std::vector<double>& lo,
                  const std::vector<double>& hi, const std::string& name) {
    if (x.size() != lo.size()) {
        throw std::invalid_argument(name + ": wrong decision vector length");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lo[i] && x[i] <= hi[i])) {
            throw std::invalid_argument(name + ": decision variable out of bounds");
        }
    }
}

// ---------------------------------------------------------------------------
// DTLZ suite, 3 objectives. Tail variables are the last k = n - M + 1.

double dtlz_g_rastrigin(std::span<const double> tail) {
    double g = static_cast<double>(tail.size());
    for (double xi : tail) {
        g += (xi - 0.5) * (xi - 0.5) - std::cos(20.0 * kPi * (xi - 0.5));
    }
    return 100.0 * g;
}

double dtlz_g_sphere(std::span<const double> tail) {
    double g = 0.0;
    for (double xi : tail) g += (xi - 0.5) * (xi - 0.5);
    return g;
}

ObjectiveVector dtlz1_eval(std::span<const double> x) {
    const int m = 3;
    double g = dtlz_g_rastrigin(x.subspan(m - 1));
    ObjectiveVector f(m);
    for (int j = 0; j < m; ++j) {
        double v = 0.5 * (1.0 + g);
        for (int i = 0; i < m - 1 - j; ++i) v *= x[static_cast<std::size_t>(i)];
        if (j > 0) v *= 1.0 - x[static_cast<std::size_t>(m - 1 - j)];
        f[static_cast<std::size_t>(j)] = v;
    }
    return f;
}

// Shared shape for DTLZ2/3/4/5/6: product of cosines over the given angles.
ObjectiveVector angle_shape(std::span<const double> theta, double g) {
    const std::size_t m = theta.size() + 1;
    ObjectiveVector f(m);
    for (std::size_t j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (std::size_t i = 0; i + j + 1 < m; ++i) v *= std::cos(theta[i]);
        if (j > 0) v *= std::sin(theta[m - 1 - j]);
        f[j] = v;
    }
    return f;
}

ObjectiveVector dtlz2_like_eval(std::span<const double> x, double g,
                                double position_exponent) {
    const int m = 3;
    std::vector<double> theta(m - 1);
    for (int i = 0; i < m - 1; ++i) {
        theta[static_cast<std::size_t>(i)] =
            0.5 * kPi * std::pow(x[static_cast<std::size_t>(i)], position_exponent);
    }
    return angle_shape(theta, g);
}

ObjectiveVector dtlz5_like_eval(std::span<const double> x, double g) {
    const int m = 3;
    std::vector<double> theta(m - 1);
    theta[0] = 0.5 * kPi * x[0];
    for (int i = 1; i < m - 1; ++i) {
        theta[static_cast<std::size_t>(i)] =
            kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[static_cast<std::size_t>(i)]);
    }
    return angle_shape(theta, g);
}

ObjectiveVector dtlz7_eval(std::span<const double> x) {
    const int m = 3;
    auto tail = x.subspan(m - 1);
    double g = 0.0;
    for (double xi : tail) g += xi;
    g = 1.0 + 9.0 * g / static_cast<double>(tail.size());
    ObjectiveVector f(m);
    double h = static_cast<double>(m);
    for (int j = 0; j < m - 1; ++j) {
        double fj = x[static_cast<std::size_t>(j)];
        f[static_cast<std::size_t>(j)] = fj;
        h -= fj / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * fj));
    }
    f[m - 1] = (1.0 + g) * h;
    return f;
}

// Simplex lattice with h divisions per side, scaled by `scale`; the standard
// uniform weight lattice for 3-objective fronts.
ReferenceFront simplex_lattice(std::size_t count, double scale, bool normalize) {
    std::size_t h = 1;
    while ((h + 1) * (h + 2) / 2 < count) ++h;
    ReferenceFront front;
    front.reserve((h + 1) * (h + 2) / 2);
    for (std::size_t i = 0; i <= h; ++i) {
        for (std::size_t j = 0; j + i <= h; ++j) {
            std::size_t k = h - i - j;
            ObjectiveVector p = {static_cast<double>(i) / static_cast<double>(h),
                                 static_cast<double>(j) / static_cast<double>(h),
                                 static_cast<double>(k) / static_cast<double>(h)};
            if (normalize) {
                double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
                for (double& v : p) v /= norm;
            }
            for (double& v : p) v *= scale;
            front.push_back(std::move(p));
        }
    }
    return front;
}

ReferenceFront dtlz5_front(std::size_t count) {
    ReferenceFront front;
    front.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double t = 0.5 * kPi * static_cast<double>(i) / static_cast<double>(count - 1);
        front.push_back({std::cos(t) * std::cos(0.25 * kPi),
                         std::cos(t) * std::sin(0.25 * kPi), std::sin(t)});
    }
    return front;
}

ReferenceFront dtlz7_front(std::size_t count) {
    // f3 decomposes as phi(f1) + phi(f2); a pair (a, b) is Pareto-optimal
    // exactly when both a and b are strict running minima of phi from the
    // left. Scan phi on a fine grid, keep those abscissae, take the product.
    auto phi = [](double t) { return 3.0 - t * (1.0 + std::sin(3.0 * kPi * t)); };
    const std::size_t grid = 20000;
    std::vector<double> keep;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= grid; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(grid);
        double v = phi(t);
        if (v < best) {
            best = v;
            keep.push_back(t);
        }
    }
    std::size_t per_axis = 1;
    while (per_axis * per_axis < count) ++per_axis;
    std::vector<double> axis;
    axis.reserve(per_axis);
    for (std::size_t i = 0; i < per_axis; ++i) {
        std::size_t idx = i * (keep.size() - 1) / (per_axis - 1);
        axis.push_back(keep[idx]);
    }
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    ReferenceFront front;
    front.reserve(axis.size() * axis.size());
    for (double a : axis) {
        for (double b : axis) {
            front.push_back({a, b, 2.0 * (phi(a) + phi(b)) / 2.0});
        }
    }
    return front;
}

// ---------------------------------------------------------------------------
// UF suite (2 objectives, n = 10). J1 holds the odd indices j >= 3, J2 the
// even ones, both in the 1-based numbering of the definitions.

struct UfTerms {
    double sum1 = 0.0, sum2 = 0.0;  // sums of per-index values over J1 / J2
    double prod1 = 1.0, prod2 = 1.0;
    int count1 = 0, count2 = 0;
};

template <typename PerIndex>
UfTerms uf_accumulate(std::span<const double> x, PerIndex per_index) {
    UfTerms t;
    for (std::size_t j = 2; j <= x.size(); ++j) {  // 1-based variable index
        auto [value, factor] = per_index(j, x[j - 1]);
        if (j % 2 == 1) {
            t.sum1 += value;
            t.prod1 *= factor;
            ++t.count1;
        } else {
            t.sum2 += value;
            t.prod2 *= factor;
            ++t.count2;
        }
    }
    return t;
}

ObjectiveVector uf1_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double y = xj - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        return std::pair{y * y, 1.0};
    });
    return {x[0] + 2.0 * t.sum1 / t.count1,
            1.0 - std::sqrt(x[0]) + 2.0 * t.sum2 / t.count2};
}

ObjectiveVector uf2_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double jd = static_cast<double>(j);
        double envelope =
            0.3 * x[0] * x[0] * std::cos(24.0 * kPi * x[0] + 4.0 * jd * kPi / n) +
            0.6 * x[0];
        double angle = 6.0 * kPi * x[0] + jd * kPi / n;
        double y = j % 2 == 1 ? xj - envelope * std::cos(angle)
                              : xj - envelope * std::sin(angle);
        return std::pair{y * y, 1.0};
    });
    return {x[0] + 2.0 * t.sum1 / t.count1,
            1.0 - std::sqrt(x[0]) + 2.0 * t.sum2 / t.count2};
}

ObjectiveVector uf3_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double jd = static_cast<double>(j);
        double y = xj - std::pow(x[0], 0.5 * (1.0 + 3.0 * (jd - 2.0) / (n - 2.0)));
        return std::pair{y * y, std::cos(20.0 * y * kPi / std::sqrt(jd))};
    });
    return {x[0] + 2.0 / t.count1 * (4.0 * t.sum1 - 2.0 * t.prod1 + 2.0),
            1.0 - std::sqrt(x[0]) + 2.0 / t.count2 * (4.0 * t.sum2 - 2.0 * t.prod2 + 2.0)};
}

ObjectiveVector uf4_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double y = xj - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        double h = std::abs(y) / (1.0 + std::exp(2.0 * std::abs(y)));
        return std::pair{h, 1.0};
    });
    return {x[0] + 2.0 * t.sum1 / t.count1,
            1.0 - x[0] * x[0] + 2.0 * t.sum2 / t.count2};
}

ObjectiveVector uf5_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double big_n = 10.0, eps = 0.1;
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double y = xj - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        double h = 2.0 * y * y - std::cos(4.0 * kPi * y) + 1.0;
        return std::pair{h, 1.0};
    });
    double spike = (0.5 / big_n + eps) * std::abs(std::sin(2.0 * big_n * kPi * x[0]));
    return {x[0] + spike + 2.0 * t.sum1 / t.count1,
            1.0 - x[0] + spike + 2.0 * t.sum2 / t.count2};
}

ObjectiveVector uf6_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double big_n = 2.0, eps = 0.1;
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double y = xj - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        return std::pair{y * y, std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)))};
    });
    double hump = std::max(0.0, 2.0 * (0.5 / big_n + eps) *
                                    std::sin(2.0 * big_n * kPi * x[0]));
    return {x[0] + hump + 2.0 / t.count1 * (4.0 * t.sum1 - 2.0 * t.prod1 + 2.0),
            1.0 - x[0] + hump + 2.0 / t.count2 * (4.0 * t.sum2 - 2.0 * t.prod2 + 2.0)};
}

ObjectiveVector uf7_eval(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    auto t = uf_accumulate(x, [&](std::size_t j, double xj) {
        double y = xj - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        return std::pair{y * y, 1.0};
    });
    double root = std::pow(x[0], 0.2);
    return {root + 2.0 * t.sum1 / t.count1, 1.0 - root + 2.0 * t.sum2 / t.count2};
}

// Curve f2 = shape(f1) sampled uniformly in f1.
ReferenceFront curve_front(std::size_t count, double (*shape)(double)) {
    ReferenceFront front;
    front.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double f1 = static_cast<double>(i) / static_cast<double>(count - 1);
        front.push_back({f1, shape(f1)});
    }
    return front;
}

double concave_shape(double f1) { return 1.0 - std::sqrt(f1); }
double uf4_shape(double f1) { return 1.0 - f1 * f1; }
double linear_shape(double f1) { return 1.0 - f1; }

ReferenceFront uf5_front(std::size_t) {
    // The true front is 2N + 1 isolated points regardless of the requested
    // sample count.
    ReferenceFront front;
    for (int i = 0; i <= 20; ++i) {
        double f1 = static_cast<double>(i) / 20.0;
        front.push_back({f1, 1.0 - f1});
    }
    return front;
}

ReferenceFront uf6_front(std::size_t count) {
    ReferenceFront front;
    front.push_back({0.0, 1.0});  // isolated point
    std::size_t per_segment = std::max<std::size_t>(2, count / 2);
    for (std::size_t i = 0; i < per_segment; ++i) {
        double s = static_cast<double>(i) / static_cast<double>(per_segment - 1);
        double a = 0.25 + 0.25 * s;
        double b = 0.75 + 0.25 * s;
        front.push_back({a, 1.0 - a});
        front.push_back({b, 1.0 - b});
    }
    return front;
}

struct Spec {
    int n_vars;
    int n_objs;
    double lo_first, hi_first;  // bounds of x1
    double lo_rest, hi_rest;    // bounds of the remaining variables
    ObjectiveVector (*eval)(std::span<const double>);
    ReferenceFront (*front)(std::size_t);
};

ReferenceFront dtlz1_front(std::size_t count) {
    return simplex_lattice(count, 0.5, false);
}
ReferenceFront sphere_front(std::size_t count) {
    return simplex_lattice(count, 1.0, true);
}
ObjectiveVector dtlz2_eval(std::span<const double> x) {
    return dtlz2_like_eval(x, dtlz_g_sphere(x.subspan(2)), 1.0);
}
ObjectiveVector dtlz3_eval(std::span<const double> x) {
    return dtlz2_like_eval(x, dtlz_g_rastrigin(x.subspan(2)), 1.0);
}
ObjectiveVector dtlz4_eval(std::span<const double> x) {
    return dtlz2_like_eval(x, dtlz_g_sphere(x.subspan(2)), 100.0);
}
ObjectiveVector dtlz5_eval(std::span<const double> x) {
    return dtlz5_like_eval(x, dtlz_g_sphere(x.subspan(2)));
}
ObjectiveVector dtlz6_eval(std::span<const double> x) {
    double g = 0.0;
    for (double xi : x.subspan(2)) g += std::pow(xi, 0.1);
    return dtlz5_like_eval(x, g);
}
ReferenceFront uf_concave_front(std::size_t count) {
    return curve_front(count, concave_shape);
}
ReferenceFront uf4_front_fn(std::size_t count) {
    return curve_front(count, uf4_shape);
}
ReferenceFront uf7_front_fn(std::size_t count) {
    return curve_front(count, linear_shape);
}

const std::vector<std::pair<std::string, Spec>>& registry() {
    static const std::vector<std::pair<std::string, Spec>> table = {
        {"dtlz1", {6, 3, 0, 1, 0, 1, dtlz1_eval, dtlz1_front}},
        {"dtlz2", {7, 3, 0, 1, 0, 1, dtlz2_eval, sphere_front}},
        {"dtlz3", {10, 3, 0, 1, 0, 1, dtlz3_eval, sphere_front}},
        {"dtlz4", {10, 3, 0, 1, 0, 1, dtlz4_eval, sphere_front}},
        {"dtlz5", {10, 3, 0, 1, 0, 1, dtlz5_eval, dtlz5_front}},
        {"dtlz6", {10, 3, 0, 1, 0, 1, dtlz6_eval, dtlz5_front}},
        {"dtlz7", {10, 3, 0, 1, 0, 1, dtlz7_eval, dtlz7_front}},
        {"uf1", {10, 2, 0, 1, -1, 1, uf1_eval, uf_concave_front}},
        {"uf2", {10, 2, 0, 1, -1, 1, uf2_eval, uf_concave_front}},
        {"uf3", {10, 2, 0, 1, 0, 1, uf3_eval, uf_concave_front}},
        {"uf4", {10, 2, 0, 1, -2, 2, uf4_eval, uf4_front_fn}},
        {"uf5", {10, 2, 0, 1, -1, 1, uf5_eval, uf5_front}},
        {"uf6", {10, 2, 0, 1, -1, 1, uf6_eval, uf6_front}},
        {"uf7", {10, 2, 0, 1, -1, 1, uf7_eval, uf7_front_fn}},
    };
    return table;
}

}  // namespace

ProblemDef by_name(const std::string& name) {
    for (const auto& [key, spec] : registry()) {
        if (key != name) continue;
        ProblemDef def;
        def.name = key;
        def.n_vars = spec.n_vars;
        def.n_objs = spec.n_objs;
        def.lower.assign(static_cast<std::size_t>(spec.n_vars), spec.lo_rest);
        def.upper.assign(static_cast<std::size_t>(spec.n_vars), spec.hi_rest);
        def.lower[0] = spec.lo_first;
        def.upper[0] = spec.hi_first;
        auto eval = spec.eval;
        auto lo = def.lower;
        auto hi = def.upper;
        auto problem_name = def.name;
        def.evaluate = [eval, lo, hi, problem_name](std::span<const double> x) {
            check_bounds(x, lo, hi, problem_name);
            return eval(x);
        };
        def.reference_front = spec.front;
        return def;
    }
    throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> all_names() {
    std::vector<std::string> names;
    for (const auto& [key, spec] : registry()) names.push_back(key);
    return names;
}

}  // namespace mosa::problems
