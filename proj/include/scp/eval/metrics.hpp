#pragma once

#include "scp/graph.hpp"

#include <Eigen/Dense>

#include <optional>

namespace scp {

// Confusion counts over all ordered (i, j) cells, diagonal included, so the
// four counts always sum to d*d. Note the diagonal inflates TN: the counting
// is kept literal to the defining sums.
struct ConfusionCounts {
  long long tp = 0;
  long long fp = 0;
  long long tn = 0;
  long long fn = 0;
};

// FPR/FNR/precision/F1; a 0/0 case is reported as nullopt rather than thrown.
struct Rates {
  std::optional<double> fpr;
  std::optional<double> fnr;
  std::optional<double> precision;
  std::optional<double> f1;
};

// Structural hamming distance: additions + deletions + reversals needed to
// turn `est` into `gt`, evaluated by the indicator-sum form.
long long shd(const Eigen::MatrixXi& est, const Eigen::MatrixXi& gt);

ConfusionCounts confusion(const Eigen::MatrixXi& est,
                          const Eigen::MatrixXi& gt);

Rates rates(const ConfusionCounts& c);

struct MetricBundle {
  long long shd = 0;
  ConfusionCounts counts;
  Rates r;
};

MetricBundle metrics_on_graph(const Eigen::MatrixXi& est,
                              const GroundTruth& gt);

// Evaluates |PK|: both Forced (1) and Unknown (-1) count as asserted edges.
MetricBundle metrics_on_pk(const PriorKnowledge& pk, const GroundTruth& gt);

}  // namespace scp
