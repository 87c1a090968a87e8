#pragma once

#include "scp/dataset.hpp"
#include "scp/graph.hpp"

#include <optional>
#include <vector>

namespace scp {

struct ExactSearchOptions {
  // The subset dynamic program is exponential in d.
  int max_variables = 12;
};

// Score-optimal DAG under the decomposable Gaussian BIC score
//   score(DAG) = sum_i  -n*log(RSS_i/n) - |parents(i)|*log(n)
// found by dynamic programming over variable subsets (best parent set per
// sink, best sink per subset). A super-structure restricts the search:
// edge x_j -> x_i is allowed only if entry (i, j) is nonzero.
CausalGraph exact_search(
    const Dataset& data,
    const std::optional<PriorKnowledge>& super_structure = std::nullopt,
    const ExactSearchOptions& options = {});

// Per-node term of the score above, on centered data. Shared with the
// enumeration oracle in the tests so they search the same landscape.
double exact_search_local_score(const Dataset& data, int node,
                                const std::vector<int>& parents);

}  // namespace scp
