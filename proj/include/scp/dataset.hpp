#pragma once

#include "scp/common.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace scp {

// Named continuous variables as an n x d matrix, rows = observations.
struct Dataset {
  std::vector<std::string> variable_names;
  Eigen::MatrixXd values;
  bool standardized = false;

  int n() const { return static_cast<int>(values.rows()); }
  int d() const { return static_cast<int>(values.cols()); }
};

// Parses delimiter-separated numeric text. Missing values, non-numeric cells
// and duplicate names are rejected with the offending row/column named.
Dataset load_dataset(const std::string& path, bool has_header = true,
                     char delimiter = ',');

// Column-wise z-score with the population convention (divide by n), so each
// standardized column has mean 0 and variance 1 exactly. Constant columns are
// rejected by variable name.
Dataset standardize(const Dataset& data);

}  // namespace scp
