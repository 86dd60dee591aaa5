#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mosa/core.hpp"
#include "mosa/rng.hpp"

namespace mosa {

// Point that bounds a front from the worse side (larger, for minimization).
using ReferencePoint = std::vector<double>;

// Samples of a problem's true Pareto front, used by igd() and to place
// reporting reference points.
using ReferenceFront = std::vector<ObjectiveVector>;

// Exact hypervolume of a 2-D front as a fraction of the cuboid [0, ref].
// Requires every point component-wise <= ref.
double hv_exact_2d(std::span<const ObjectiveVector> front,
                   const ReferencePoint& ref);

// Monte-Carlo hypervolume fraction: share of uniform samples in [0, ref]^n
// dominated by at least one front member. Deterministic given the rng state.
double hv_monte_carlo(std::span<const ObjectiveVector> front,
                      const ReferencePoint& ref, std::size_t samples, Rng& rng);

// hv() fraction picking the exact path for 2 objectives, Monte-Carlo above.
double hv(std::span<const ObjectiveVector> front, const ReferencePoint& ref,
          std::size_t samples, Rng& rng);

// Exclusive hypervolume HV(front) - HV(front \ {i}) per member, as fractions
// of the reference cuboid. Exact for 2 objectives; for 3+ the fraction of
// samples dominated solely by member i, one shared sample set per call.
// Duplicate objective vectors are rejected.
std::vector<double> hv_contributions(std::span<const ObjectiveVector> front,
                                     const ReferencePoint& ref,
                                     std::size_t samples, Rng& rng);

// Crowding distance per point: boundary points per objective get +infinity,
// interior points the normalized neighbor gap summed over objectives.
// Fronts of size <= 2 are all infinite.
std::vector<double> crowding_distances(std::span<const ObjectiveVector> front);

// Mean over reference-front points of the minimum Euclidean distance to any
// front point.
double igd(std::span<const ObjectiveVector> front,
           std::span<const ObjectiveVector> reference_front);

}  // namespace mosa
