#pragma once

#include <span>
#include <string>
#include <vector>

#include "treelab/kernels.hpp"
#include "treelab/polynomial.hpp"
#include "treelab/tree_stats.hpp"
#include "treelab/trees.hpp"

namespace treelab {

Polynomial counts_to_polynomial(const ExponentCounts& counts, const std::vector<std::string>& variables);

// Sum over the family of prod variables[i]^stat_i(T). An empty `variables`
// uses default_variable for each statistic. jobs == 1 runs the serial kernel.
Polynomial distribution_polynomial(std::span<const WeaklyIncreasingTree> family, const std::vector<StatisticId>& stats,
                                   std::vector<std::string> variables = {}, int jobs = 0);

}  // namespace treelab
