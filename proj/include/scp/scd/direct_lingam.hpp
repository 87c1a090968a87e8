#pragma once

#include "scp/dataset.hpp"
#include "scp/graph.hpp"

#include <optional>
#include <vector>

namespace scp {

struct LingamOptions {
  // Coefficients below this magnitude (post-standardization) are dropped.
  double prune_threshold = 1e-3;
};

// DirectLiNGAM: iterative exogenous-variable selection by the entropy-based
// mutual-information-difference measure, then least-squares coefficients
// along the causal order.
//
// Prior knowledge: a Forced entry (i, j) makes x_j precede x_i in the order
// and keeps the edge in the output; a Forbidden entry excludes x_j from the
// regression for x_i so the directed edge can never appear. A cyclic Forced
// subgraph is rejected (run the acyclic transform first).
CausalGraph direct_lingam(
    const Dataset& data,
    const std::optional<PriorKnowledge>& pk = std::nullopt,
    const LingamOptions& options = {});

std::vector<int> lingam_causal_order(
    const Dataset& data,
    const std::optional<PriorKnowledge>& pk = std::nullopt);

}  // namespace scp
