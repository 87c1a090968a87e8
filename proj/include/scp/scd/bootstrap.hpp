#pragma once

#include "scp/dataset.hpp"
#include "scp/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace scp {

// Per-edge emergence frequencies over bootstrap resamples. `resamples` is the
// number of successful runs; every entry is k/resamples for an integer k.
struct BootstrapSummary {
  std::vector<std::string> names;
  Eigen::MatrixXd directed_prob;
  Eigen::MatrixXd undirected_prob;  // PC only, symmetric; all-zero otherwise
  int resamples = 0;
  int requested = 0;
  int failures = 0;
};

struct BootstrapOptions {
  double pc_alpha = 0.05;
  double lingam_prune_threshold = 1e-3;
  int exact_search_max_variables = 12;
  bool parallel = true;
};

using MethodRunner = std::function<CausalGraph(
    const Dataset&, const std::optional<PriorKnowledge>&)>;

// Draws B resamples of n rows with replacement (resample r is seeded from
// (seed, r), so results are reproducible and independent of scheduling),
// runs `run` on each and accumulates edge frequencies. Resamples that fail
// numerically are skipped; more than 10% failures aborts the call.
BootstrapSummary bootstrap_with(const MethodRunner& run, const Dataset& data,
                                int resamples,
                                const std::optional<PriorKnowledge>& pk,
                                std::uint64_t seed, bool parallel = true);

// Serial reference implementation; bit-identical to bootstrap_with.
BootstrapSummary bootstrap_with_serial(const MethodRunner& run,
                                       const Dataset& data, int resamples,
                                       const std::optional<PriorKnowledge>& pk,
                                       std::uint64_t seed);

BootstrapSummary bootstrap(Method method, const Dataset& data, int resamples,
                           const std::optional<PriorKnowledge>& pk,
                           std::uint64_t seed,
                           const BootstrapOptions& options = {});

MethodRunner make_method_runner(Method method,
                                const BootstrapOptions& options = {});

void write_bootstrap(const std::string& directed_path,
                     const std::string& undirected_path,
                     const BootstrapSummary& summary);
BootstrapSummary read_bootstrap(const std::string& directed_path,
                                const std::string& undirected_path);

}  // namespace scp
