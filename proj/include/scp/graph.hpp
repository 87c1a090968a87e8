#pragma once

#include "scp/common.hpp"

#include <Eigen/Dense>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace scp {

// Matrix convention used everywhere: entry (i, j) refers to the edge
// x_j -> x_i (row = effect, column = cause).

enum class Method { PC, ExactSearch, DirectLiNGAM };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct DirectedEdge {
  int effect = 0;
  int cause = 0;
  bool operator==(const DirectedEdge&) const = default;
};

struct CausalGraph {
  std::vector<std::string> names;
  Eigen::MatrixXi adjacency;                    // (i,j)=1 : x_j -> x_i
  std::set<std::pair<int, int>> undirected;     // PC only; pairs stored (a<b)
  std::optional<Eigen::MatrixXd> coefficients;  // DirectLiNGAM only

  int dim() const { return static_cast<int>(adjacency.rows()); }

  static CausalGraph empty(int d, std::vector<std::string> names = {});

  // Row-major (effect outer, cause inner) edge enumeration.
  std::vector<DirectedEdge> edges() const;

  bool has_directed_cycle() const;

  // Checks the type invariants: zero diagonal, undirected pairs disjoint from
  // directed entries, coefficients nonzero exactly where adjacency is 1.
  void validate() const;
};

CausalGraph graph_from_edges(int d, const std::vector<DirectedEdge>& edges,
                             std::vector<std::string> names = {});

struct GroundTruth {
  std::vector<std::string> names;
  Eigen::MatrixXi adjacency;

  int dim() const { return static_cast<int>(adjacency.rows()); }
  void validate() const;
};

// Trinary prior-knowledge entries. ExactSearch uses the binary subset {0, 1}
// where 1 only means "not forbidden".
inline constexpr int kForbidden = 0;
inline constexpr int kForced = 1;
inline constexpr int kUnknown = -1;

struct PriorKnowledge {
  Method method = Method::DirectLiNGAM;
  Eigen::MatrixXi entries;

  int dim() const { return static_cast<int>(entries.rows()); }

  static PriorKnowledge all_unknown(int d, Method method);

  void validate() const;
};

// Serialization. Adjacency/prior matrices reuse the labeled-matrix format;
// DOT output lists one edge per line, annotated with the coefficient when
// present.
std::string to_dot(const CausalGraph& g);
void write_graph(const std::string& path, const CausalGraph& g);
CausalGraph read_graph(const std::string& path);
void write_prior(const std::string& path, const PriorKnowledge& pk);
PriorKnowledge read_prior(const std::string& path, Method method);

}  // namespace scp
