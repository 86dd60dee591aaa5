#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "mosa/core.hpp"
#include "mosa/problems.hpp"

namespace mosa::faultid {

// Cantilever Euler-Bernoulli beam, 2 DOF per node (deflection, rotation),
// first node fully fixed.
struct BeamModel {
    int n_elements = 20;
    double youngs_modulus = 69e9;  // Pa
    double element_length = 10.0;  // m
    double second_moment = 1.0 / 12.0;  // m^4, square 1 m x 1 m section
    double area = 1.0;                  // m^2
    double density = 2700.0;            // kg/m^3
};

// Assembled free-DOF matrices. stiffness equals the sum of element_blocks.
struct BeamMatrices {
    Eigen::MatrixXd stiffness;
    Eigen::MatrixXd mass;
    std::vector<Eigen::MatrixXd> element_blocks;  // per-element stiffness share
};

BeamMatrices assemble(const BeamModel& model);

struct Modes {
    Eigen::VectorXd lambdas;  // eigenvalues, ascending
    Eigen::MatrixXd phis;     // columns mass-normalized, sign-fixed
};

// Smallest n_modes generalized eigenpairs of K phi = lambda M phi with
// phi^T M phi = 1 and the largest-magnitude entry of each vector positive.
Modes eigen_solve(const Eigen::MatrixXd& stiffness, const Eigen::MatrixXd& mass,
                  int n_modes);

// S(j, i) = phi_j^T K_i phi_j over the healthy modes: first-order map from
// fault indices to eigenvalue decrease.
Eigen::MatrixXd sensitivity(const BeamMatrices& matrices,
                            const Eigen::MatrixXd& healthy_phis);

struct MeasurementSet {
    Eigen::VectorXd dlambda;  // damaged-minus-healthy eigenvalue changes, q modes
    Eigen::VectorXd dphi;     // monitored-mode shape change over free DOFs
    double noise_level = 0.02;
    std::uint64_t seed = 0;
};

inline constexpr int kMeasuredModes = 5;    // first q natural frequencies
inline constexpr int kMonitoredMode = 2;    // mode whose shape is measured

// Exact damaged/healthy eigen solves for the fault pattern, multiplicative
// Gaussian noise per entry: value * (1 + noise_level * g). Deterministic per
// seed.
MeasurementSet synthesize_measurements(const BeamMatrices& matrices,
                                       std::span<const double> alpha,
                                       double noise_level, std::uint64_t seed);

// Squared cosine similarity of two change vectors; 0 when either is zero.
double mdlac(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Two-objective identification problem over the fault indices:
// f1 = -MDLAC(measured dlambda, predicted dlambda(alpha)),
// f2 = -MDLAC(measured dphi, predicted dphi(alpha)),
// both predictions from exact re-solves of the damaged eigenproblem with
// modes matched to the healthy ones by modal assurance.
ProblemDef make_fault_problem(const BeamModel& model, const MeasurementSet& meas,
                              double alpha_lower, double alpha_upper);

struct ElementStats {
    std::vector<double> mean;
    std::vector<double> variance;       // sample variance
    std::vector<int> n_outliers;        // 1.5 IQR rule per element
    std::vector<std::vector<double>> samples;  // pooled values per element
};

// Pools the decision vectors of all archive members across runs and reports
// per-element statistics.
ElementStats solution_statistics(std::span<const ParetoArchive> archives);

}  // namespace mosa::faultid
