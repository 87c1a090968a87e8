#pragma once

#include "scp/dataset.hpp"
#include "scp/graph.hpp"

namespace scp {

// Linear-Gaussian SEM fit of a DAG structure: per-equation least squares,
// implied covariance from the recursive system, likelihood-ratio chi2 against
// the sample covariance and the usual comparative indices.
struct SemFit {
  double chi2 = 0.0;
  int df = 0;
  double loglik = 0.0;
  double cfi = 1.0;    // clamped to [0, 1]
  double rmsea = 0.0;  // 0 when chi2 <= df
  double bic = 0.0;
  int free_params = 0;
};

SemFit fit_sem(const Dataset& data, const CausalGraph& g);

}  // namespace scp
