#include "scp/eval/metrics.hpp"

namespace scp {

namespace {

// Indicator from the SHD definition: 1(x) = 1 iff x == 0.
inline long long ind(long long x) { return x == 0 ? 1 : 0; }

void check_dims(const Eigen::MatrixXi& est, const Eigen::MatrixXi& gt) {
  if (est.rows() != gt.rows() || est.cols() != gt.cols() ||
      est.rows() != est.cols())
    throw ValidationError("metric inputs must be square matrices of equal "
                          "dimension");
}

}  // namespace

long long shd(const Eigen::MatrixXi& est, const Eigen::MatrixXi& gt) {
  check_dims(est, gt);
  const int d = static_cast<int>(gt.rows());
  long long total = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const long long g = gt(i, j), grev = gt(j, i);
      const long long e = est(i, j), erev = est(j, i);
      total += ind(g) * ind(grev) * ind(e - 1);          // A: spurious edge
      total += ind(e) * ind(erev) * ind(g - 1);          // D: missing edge
      total += ind(g) * ind(grev - 1) * ind(e - 1) * ind(erev);  // R: reversal
    }
  }
  return total;
}

ConfusionCounts confusion(const Eigen::MatrixXi& est,
                          const Eigen::MatrixXi& gt) {
  check_dims(est, gt);
  const int d = static_cast<int>(gt.rows());
  ConfusionCounts c;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const long long g = gt(i, j), e = est(i, j);
      c.tp += ind(g - 1) * ind(e - 1);
      c.fp += ind(g) * ind(e - 1);
      c.tn += ind(g) * ind(e);
      c.fn += ind(g - 1) * ind(e);
    }
  }
  return c;
}

Rates rates(const ConfusionCounts& c) {
  Rates r;
  if (c.tn + c.fp > 0)
    r.fpr = static_cast<double>(c.fp) / static_cast<double>(c.tn + c.fp);
  if (c.tp + c.fn > 0)
    r.fnr = static_cast<double>(c.fn) / static_cast<double>(c.tp + c.fn);
  if (c.tp + c.fp > 0)
    r.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (2 * c.tp + c.fn + c.fp > 0)
    r.f1 = static_cast<double>(2 * c.tp) /
           static_cast<double>(2 * c.tp + c.fn + c.fp);
  return r;
}

MetricBundle metrics_on_graph(const Eigen::MatrixXi& est,
                              const GroundTruth& gt) {
  MetricBundle b;
  b.shd = shd(est, gt.adjacency);
  b.counts = confusion(est, gt.adjacency);
  b.r = rates(b.counts);
  return b;
}

MetricBundle metrics_on_pk(const PriorKnowledge& pk, const GroundTruth& gt) {
  return metrics_on_graph(pk.entries.cwiseAbs(), gt);
}

}  // namespace scp
