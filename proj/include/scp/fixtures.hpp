#pragma once

#include "scp/graph.hpp"

#include <string>

namespace scp {

// Bundled ground-truth adjacency matrices for the AutoMPG, DWD and Sachs
// benchmarks, loaded from the versioned fixture files under data/fixtures.
GroundTruth ground_truth_fixture(const std::string& name);

// Directory the fixtures are read from; defaults to the compiled-in source
// data directory, overridable for relocated installs.
void set_data_dir(const std::string& dir);
std::string data_dir();

}  // namespace scp
