#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mosa/metrics.hpp"

namespace mosa {

// A box-constrained minimization problem. evaluate must be a pure function
// of x; reference_front samples the known true Pareto front (empty function
// when the front is unknown).
struct ProblemDef {
    std::string name;
    int n_vars = 0;
    int n_objs = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<ObjectiveVector(std::span<const double>)> evaluate;
    std::function<ReferenceFront(std::size_t count)> reference_front;
};

namespace problems {

// dtlz1..dtlz7, uf1..uf7 with the benchmark dimensions used here
// (DTLZ1: 6 vars, DTLZ2: 7, DTLZ3-7: 10, all 3 objectives; UF: 10 vars,
// 2 objectives). Throws std::invalid_argument for unknown names.
ProblemDef by_name(const std::string& name);

std::vector<std::string> all_names();

}  // namespace problems
}  // namespace mosa
