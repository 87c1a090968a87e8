#pragma once

#include "scp/dataset.hpp"
#include "scp/graph.hpp"

#include <optional>

namespace scp {

// PC algorithm (PC-stable skeleton, Fisher-z partial-correlation tests,
// v-structures, Meek propagation). Produces a CPDAG-style result: directed
// adjacency plus a set of undirected pairs.
//
// Prior knowledge: Forced entries are fixed directed edges that are never
// tested away; Forbidden entries never appear as that directed edge (pairs
// forbidden in both directions are excluded from the skeleton, singly
// forbidden undirected edges are oriented the allowed way).
CausalGraph pc_discover(const Dataset& data, double alpha = 0.05,
                        const std::optional<PriorKnowledge>& pk = std::nullopt);

// Fisher-z conditional-independence decision, exposed for diagnostics and
// oracle tests. Throws NumericalError (naming the conditioning set) when the
// correlation submatrix is singular.
double fisher_z_pvalue(const Eigen::MatrixXd& corr, int n, int i, int j,
                       const std::vector<int>& cond);

}  // namespace scp
