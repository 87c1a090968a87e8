#include "scp/fixtures.hpp"

#include "scp/common.hpp"

#include <algorithm>
#include <cctype>

#ifndef SCP_DATA_DIR
#define SCP_DATA_DIR "data"
#endif

namespace scp {

namespace {
std::string g_data_dir = SCP_DATA_DIR;  // NOLINT
}

void set_data_dir(const std::string& dir) { g_data_dir = dir; }

std::string data_dir() { return g_data_dir; }

GroundTruth ground_truth_fixture(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::string file;
  if (key == "autompg") {
    file = "autompg_gt.txt";
  } else if (key == "dwd") {
    file = "dwd_gt.txt";
  } else if (key == "sachs") {
    file = "sachs_gt.txt";
  } else {
    throw ValidationError("unknown ground-truth fixture '" + name +
                          "' (expected AutoMPG, DWD or Sachs)");
  }
  const LabeledMatrix lm =
      read_labeled_matrix(g_data_dir + "/fixtures/" + file);
  GroundTruth gt;
  gt.names = lm.names;
  gt.adjacency = lm.values.cast<int>();
  gt.validate();
  return gt;
}

}  // namespace scp
