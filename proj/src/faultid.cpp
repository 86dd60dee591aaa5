#include "mosa/faultid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mosa/rng.hpp"

namespace mosa::faultid {

namespace {

void check_model(const BeamModel& model) {
    if (model.n_elements < 2) {
        throw std::invalid_argument("BeamModel: need at least 2 elements");
    }
    if (model.youngs_modulus <= 0 || model.element_length <= 0 ||
        model.second_moment <= 0 || model.area <= 0 || model.density <= 0) {
        throw std::invalid_argument("BeamModel: non-positive parameter");
    }
}

Eigen::Matrix4d element_stiffness(double ei, double l) {
    Eigen::Matrix4d k;
    double l2 = l * l;
    k << 12, 6 * l, -12, 6 * l,
        6 * l, 4 * l2, -6 * l, 2 * l2,
        -12, -6 * l, 12, -6 * l,
        6 * l, 2 * l2, -6 * l, 4 * l2;
    return k * (ei / (l * l2));
}

Eigen::Matrix4d element_mass(double rho_a, double l) {
    Eigen::Matrix4d m;
    double l2 = l * l;
    m << 156, 22 * l, 54, -13 * l,
        22 * l, 4 * l2, 13 * l, -3 * l2,
        54, 13 * l, 156, -22 * l,
        -13 * l, -3 * l2, -22 * l, 4 * l2;
    return m * (rho_a * l / 420.0);
}

void fix_signs(Eigen::MatrixXd& phis) {
    for (Eigen::Index c = 0; c < phis.cols(); ++c) {
        Eigen::Index imax;
        phis.col(c).cwiseAbs().maxCoeff(&imax);
        if (phis(imax, c) < 0) phis.col(c) = -phis.col(c);
    }
}

}  // namespace

BeamMatrices assemble(const BeamModel& model) {
    check_model(model);
    const int n_free = 2 * model.n_elements;  // node 0 clamped
    Eigen::Matrix4d ke =
        element_stiffness(model.youngs_modulus * model.second_moment,
                          model.element_length);
    Eigen::Matrix4d me =
        element_mass(model.density * model.area, model.element_length);

    BeamMatrices out;
    out.stiffness = Eigen::MatrixXd::Zero(n_free, n_free);
    out.mass = Eigen::MatrixXd::Zero(n_free, n_free);
    out.element_blocks.assign(static_cast<std::size_t>(model.n_elements),
                              Eigen::MatrixXd::Zero(n_free, n_free));

    for (int e = 0; e < model.n_elements; ++e) {
        // Global DOFs of the element's two nodes; -1 marks a clamped DOF.
        int dof[4] = {2 * e - 2, 2 * e - 1, 2 * e, 2 * e + 1};
        Eigen::MatrixXd& block = out.element_blocks[static_cast<std::size_t>(e)];
        for (int a = 0; a < 4; ++a) {
            if (dof[a] < 0) continue;
            for (int b = 0; b < 4; ++b) {
                if (dof[b] < 0) continue;
                block(dof[a], dof[b]) += ke(a, b);
                out.mass(dof[a], dof[b]) += me(a, b);
            }
        }
        out.stiffness += block;
    }
    return out;
}

Modes eigen_solve(const Eigen::MatrixXd& stiffness, const Eigen::MatrixXd& mass,
                  int n_modes) {
    if (n_modes < 1 || n_modes > stiffness.rows()) {
        throw std::invalid_argument("eigen_solve: bad mode count");
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(stiffness,
                                                                     mass);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigen_solve: factorization failed");
    }
    Modes modes;
    modes.lambdas = solver.eigenvalues().head(n_modes);
    modes.phis = solver.eigenvectors().leftCols(n_modes);
    fix_signs(modes.phis);
    return modes;
}

Eigen::MatrixXd sensitivity(const BeamMatrices& matrices,
                            const Eigen::MatrixXd& healthy_phis) {
    const auto q = healthy_phis.cols();
    const auto n = static_cast<Eigen::Index>(matrices.element_blocks.size());
    Eigen::MatrixXd s(q, n);
    for (Eigen::Index j = 0; j < q; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            s(j, i) = healthy_phis.col(j).dot(
                matrices.element_blocks[static_cast<std::size_t>(i)] *
                healthy_phis.col(j));
        }
    }
    return s;
}

namespace {

// Shared immutable context for fault evaluations. The mass matrix does not
// depend on damage, so its Cholesky factor reduces every damaged eigenproblem
// to a standard symmetric one.
struct FaultContext {
    BeamMatrices matrices;
    Eigen::LLT<Eigen::MatrixXd> mass_llt;
    Eigen::MatrixXd healthy_y;        // L^T phi for the matched healthy modes
    Eigen::VectorXd healthy_lambdas;  // first q eigenvalues
    Eigen::VectorXd healthy_phi_mon;  // monitored-mode shape
    int n_track;                      // damaged modes to consider for matching
};

struct DamagedModes {
    Eigen::VectorXd dlambda;  // per measured mode, damaged minus healthy
    Eigen::VectorXd dphi;     // monitored mode, sign-aligned change
};

FaultContext build_context(BeamMatrices matrices) {
    if (matrices.mass.rows() < kMeasuredModes) {
        throw std::invalid_argument(
            "fault context: beam too small for the measured mode count");
    }
    FaultContext ctx;
    ctx.matrices = std::move(matrices);
    ctx.mass_llt.compute(ctx.matrices.mass);
    if (ctx.mass_llt.info() != Eigen::Success) {
        throw std::runtime_error("fault context: mass matrix not positive definite");
    }
    ctx.n_track = std::min<int>(kMeasuredModes + 3,
                                static_cast<int>(ctx.matrices.mass.rows()));

    // Healthy modes through the same reduction as the damaged solves, so a
    // zero fault pattern reproduces them bitwise.
    Eigen::MatrixXd a = ctx.mass_llt.matrixL().solve(ctx.matrices.stiffness);
    a = ctx.mass_llt.matrixL().solve(a.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fault context: healthy eigen solve failed");
    }
    Eigen::MatrixXd y = solver.eigenvectors().leftCols(ctx.n_track);
    Eigen::MatrixXd phis = ctx.mass_llt.matrixU().solve(y);
    for (Eigen::Index c = 0; c < phis.cols(); ++c) {
        Eigen::Index imax;
        phis.col(c).cwiseAbs().maxCoeff(&imax);
        if (phis(imax, c) < 0) y.col(c) = -y.col(c);
    }
    ctx.healthy_lambdas = solver.eigenvalues().head(kMeasuredModes);
    // Single-column solve, the exact expression solve_damaged uses, so the
    // zero-fault shape change is bitwise zero.
    ctx.healthy_phi_mon = ctx.mass_llt.matrixU().solve(
        Eigen::VectorXd(y.col(kMonitoredMode - 1)));
    ctx.healthy_y = y;
    return ctx;
}

// Damaged eigen solve with healthy-mode matching. Modes are paired by the
// largest mass-weighted assurance |y_d . y_h| so a mode crossing cannot
// silently swap entries of dlambda.
DamagedModes solve_damaged(const FaultContext& ctx, std::span<const double> alpha) {
    Eigen::MatrixXd damaged_k = ctx.matrices.stiffness;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0.0) {
            damaged_k -= alpha[i] * ctx.matrices.element_blocks[i];
        }
    }
    // A = L^-1 K L^-T turns K phi = lambda M phi into A y = lambda y.
    Eigen::MatrixXd a = ctx.mass_llt.matrixL().solve(damaged_k);
    a = ctx.mass_llt.matrixL().solve(a.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fault evaluation: eigen solve failed");
    }

    const int q = kMeasuredModes;
    DamagedModes out;
    out.dlambda.resize(q);
    std::vector<bool> taken(static_cast<std::size_t>(ctx.n_track), false);
    int monitored_match = kMonitoredMode - 1;
    double monitored_sign = 1.0;
    for (int j = 0; j < q; ++j) {
        int best = -1;
        double best_mac = -1.0;
        for (int d = 0; d < ctx.n_track; ++d) {
            if (taken[static_cast<std::size_t>(d)]) continue;
            double mac = std::abs(solver.eigenvectors().col(d).dot(ctx.healthy_y.col(j)));
            if (mac > best_mac) {
                best_mac = mac;
                best = d;
            }
        }
        taken[static_cast<std::size_t>(best)] = true;
        out.dlambda(j) = solver.eigenvalues()(best) - ctx.healthy_lambdas(j);
        if (j == kMonitoredMode - 1) {
            monitored_match = best;
            monitored_sign =
                solver.eigenvectors().col(best).dot(ctx.healthy_y.col(j)) < 0 ? -1.0
                                                                              : 1.0;
        }
    }

    Eigen::VectorXd phi_mon = ctx.mass_llt.matrixU().solve(
        solver.eigenvectors().col(monitored_match) * monitored_sign);
    out.dphi = phi_mon - ctx.healthy_phi_mon;
    return out;
}

}  // namespace

MeasurementSet synthesize_measurements(const BeamMatrices& matrices,
                                       std::span<const double> alpha,
                                       double noise_level, std::uint64_t seed) {
    if (alpha.size() != matrices.element_blocks.size()) {
        throw std::invalid_argument("synthesize_measurements: alpha length");
    }
    for (double a : alpha) {
        if (!(a >= 0.0 && a < 1.0)) {
            throw std::invalid_argument(
                "synthesize_measurements: fault index outside [0, 1)");
        }
    }
    FaultContext ctx = build_context(matrices);
    DamagedModes exact = solve_damaged(ctx, alpha);
    MeasurementSet meas;
    meas.noise_level = noise_level;
    meas.seed = seed;
    meas.dlambda = exact.dlambda;
    meas.dphi = exact.dphi;
    Rng rng(seed);
    for (Eigen::Index i = 0; i < meas.dlambda.size(); ++i) {
        meas.dlambda(i) *= 1.0 + noise_level * rng.gaussian();
    }
    for (Eigen::Index i = 0; i < meas.dphi.size(); ++i) {
        meas.dphi(i) *= 1.0 + noise_level * rng.gaussian();
    }
    return meas;
}

double mdlac(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("mdlac: length mismatch");
    }
    double uu = u.squaredNorm();
    double vv = v.squaredNorm();
    if (uu == 0.0 || vv == 0.0) return 0.0;
    double uv = u.dot(v);
    return uv * uv / (uu * vv);
}

ProblemDef make_fault_problem(const BeamModel& model, const MeasurementSet& meas,
                              double alpha_lower, double alpha_upper) {
    if (!(alpha_lower < alpha_upper) || alpha_lower < 0.0 || alpha_upper >= 1.0) {
        throw std::invalid_argument("make_fault_problem: bad fault bounds");
    }
    auto ctx = std::make_shared<FaultContext>(build_context(assemble(model)));
    auto dlambda_meas = meas.dlambda;
    auto dphi_meas = meas.dphi;

    ProblemDef def;
    def.name = "faultid" + std::to_string(model.n_elements);
    def.n_vars = model.n_elements;
    def.n_objs = 2;
    def.lower.assign(static_cast<std::size_t>(model.n_elements), alpha_lower);
    def.upper.assign(static_cast<std::size_t>(model.n_elements), alpha_upper);
    auto lo = def.lower;
    auto hi = def.upper;
    def.evaluate = [ctx, dlambda_meas, dphi_meas, lo,
                    hi](std::span<const double> alpha) -> ObjectiveVector {
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (!(alpha[i] >= lo[i] && alpha[i] <= hi[i])) {
                throw std::invalid_argument("fault evaluation: alpha out of bounds");
            }
        }
        DamagedModes pred = solve_damaged(*ctx, alpha);
        return {-mdlac(dlambda_meas, pred.dlambda), -mdlac(dphi_meas, pred.dphi)};
    };
    return def;
}

ElementStats solution_statistics(std::span<const ParetoArchive> archives) {
    std::size_t n_elements = 0;
    for (const ParetoArchive& a : archives) {
        if (!a.empty()) {
            n_elements = a.members()[0].x.size();
            break;
        }
    }
    if (n_elements == 0) {
        throw std::invalid_argument("solution_statistics: no pooled members");
    }

    ElementStats stats;
    stats.samples.assign(n_elements, {});
    for (const ParetoArchive& a : archives) {
        for (const Solution& s : a.members()) {
            for (std::size_t e = 0; e < n_elements; ++e) {
                stats.samples[e].push_back(s.x[e]);
            }
        }
    }

    // Quartiles by linear interpolation, matching common box-plot data.
    auto quantile = [](const std::vector<double>& sorted, double p) {
        double h = p * static_cast<double>(sorted.size() - 1);
        std::size_t i = static_cast<std::size_t>(h);
        if (i + 1 >= sorted.size()) return sorted.back();
        return sorted[i] + (h - static_cast<double>(i)) * (sorted[i + 1] - sorted[i]);
    };

    stats.mean.resize(n_elements);
    stats.variance.resize(n_elements);
    stats.n_outliers.resize(n_elements);
    for (std::size_t e = 0; e < n_elements; ++e) {
        std::vector<double>& vals = stats.samples[e];
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= static_cast<double>(vals.size());
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        var = vals.size() > 1 ? var / static_cast<double>(vals.size() - 1) : 0.0;

        std::vector<double> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        double q1 = quantile(sorted, 0.25);
        double q3 = quantile(sorted, 0.75);
        double iqr = q3 - q1;
        int outliers = 0;
        for (double v : vals) {
            if (v < q1 - 1.5 * iqr || v > q3 + 1.5 * iqr) ++outliers;
        }
        stats.mean[e] = mean;
        stats.variance[e] = var;
        stats.n_outliers[e] = outliers;
    }
    return stats;
}

}  // namespace mosa::faultid
