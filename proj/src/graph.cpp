#include "scp/graph.hpp"

#include <fstream>
#include <sstream>

namespace scp {

std::string method_name(Method m) {
  switch (m) {
    case Method::PC:
      return "PC";
    case Method::ExactSearch:
      return "ExactSearch";
    case Method::DirectLiNGAM:
      return "DirectLiNGAM";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "PC" || name == "pc") return Method::PC;
  if (name == "ExactSearch" || name == "exact-search" || name == "exact")
    return Method::ExactSearch;
  if (name == "DirectLiNGAM" || name == "direct-lingam" || name == "lingam")
    return Method::DirectLiNGAM;
  throw ValidationError("unknown method '" + name +
                        "' (expected PC, ExactSearch or DirectLiNGAM)");
}

CausalGraph CausalGraph::empty(int d, std::vector<std::string> names) {
  CausalGraph g;
  g.adjacency = Eigen::MatrixXi::Zero(d, d);
  if (names.empty())
    for (int k = 0; k < d; ++k) names.push_back("x" + std::to_string(k + 1));
  g.names = std::move(names);
  return g;
}

std::vector<DirectedEdge> CausalGraph::edges() const {
  std::vector<DirectedEdge> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (adjacency(i, j)) out.push_back({i, j});
  return out;
}

bool CausalGraph::has_directed_cycle() const {
  const int d = dim();
  std::vector<int> indeg(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (adjacency(i, j)) ++indeg[i];
  std::vector<int> stack;
  for (int i = 0; i < d; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    const int cause = stack.back();
    stack.pop_back();
    ++seen;
    for (int i = 0; i < d; ++i) {
      if (adjacency(i, cause) && --indeg[i] == 0) stack.push_back(i);
    }
  }
  return seen != d;
}

void CausalGraph::validate() const {
  const int d = dim();
  if (adjacency.cols() != d) throw ValidationError("adjacency not square");
  for (int i = 0; i < d; ++i)
    if (adjacency(i, i) != 0)
      throw ValidationError("adjacency diagonal must be zero");
  for (const auto& [a, b] : undirected) {
    if (a < 0 || b < 0 || a >= d || b >= d || a >= b)
      throw ValidationError("undirected pair out of range or unnormalized");
    if (adjacency(a, b) || adjacency(b, a))
      throw ValidationError("undirected pair coincides with a directed edge");
  }
  if (coefficients) {
    if (coefficients->rows() != d || coefficients->cols() != d)
      throw ValidationError("coefficient matrix dimension mismatch");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const bool nz = (*coefficients)(i, j) != 0.0;
        if (nz != (adjacency(i, j) == 1))
          throw ValidationError(
              "coefficients must be nonzero exactly where adjacency is 1");
      }
  }
}

CausalGraph graph_from_edges(int d, const std::vector<DirectedEdge>& edges,
                             std::vector<std::string> names) {
  CausalGraph g = CausalGraph::empty(d, std::move(names));
  for (const auto& e : edges) {
    if (e.effect < 0 || e.cause < 0 || e.effect >= d || e.cause >= d ||
        e.effect == e.cause)
      throw ValidationError("edge index out of range");
    g.adjacency(e.effect, e.cause) = 1;
  }
  return g;
}

void GroundTruth::validate() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (adjacency(i, j) != 0 && adjacency(i, j) != 1)
        throw ValidationError("ground truth entries must be 0 or 1");
      if (i == j && adjacency(i, j) != 0)
        throw ValidationError("ground truth diagonal must be zero");
    }
}

PriorKnowledge PriorKnowledge::all_unknown(int d, Method method) {
  PriorKnowledge pk;
  pk.method = method;
  const int fill = method == Method::ExactSearch ? kForced : kUnknown;
  pk.entries = Eigen::MatrixXi::Constant(d, d, fill);
  for (int i = 0; i < d; ++i) pk.entries(i, i) = kForbidden;
  return pk;
}

void PriorKnowledge::validate() const {
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    if (entries(i, i) != kForbidden)
      throw ValidationError("prior-knowledge diagonal must be Forbidden");
    for (int j = 0; j < d; ++j) {
      const int v = entries(i, j);
      if (v != kForbidden && v != kForced && v != kUnknown)
        throw ValidationError("prior-knowledge entries must be in {1,0,-1}");
      if (method == Method::ExactSearch && v == kUnknown)
        throw ValidationError(
            "ExactSearch prior knowledge must be binary (0/1)");
    }
  }
}

std::string to_dot(const CausalGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int k = 0; k < g.dim(); ++k)
    out << "  \"" << g.names[k] << "\";\n";
  for (const auto& e : g.edges()) {
    out << "  \"" << g.names[e.cause] << "\" -> \"" << g.names[e.effect]
        << "\"";
    if (g.coefficients)
      out << " [label=\"" << format_double((*g.coefficients)(e.effect, e.cause), 2)
          << "\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : g.undirected)
    out << "  \"" << g.names[a] << "\" -> \"" << g.names[b]
        << "\" [dir=none];\n";
  out << "}\n";
  return out.str();
}

void write_graph(const std::string& path, const CausalGraph& g) {
  Eigen::MatrixXd m = g.adjacency.cast<double>();
  // Undirected PC pairs are encoded as 2 in both cells so directed entries
  // stay 0/1 and the round trip is exact.
  for (const auto& [a, b] : g.undirected) {
    m(a, b) = 2;
    m(b, a) = 2;
  }
  write_labeled_matrix(path, g.names, m,
                       "adjacency (row=effect, col=cause); 2 = undirected");
  if (g.coefficients)
    write_labeled_matrix(path + ".coef", g.names, *g.coefficients,
                         "coefficients b_ij (row=effect, col=cause)");
}

CausalGraph read_graph(const std::string& path) {
  const LabeledMatrix lm = read_labeled_matrix(path);
  const int d = static_cast<int>(lm.names.size());
  CausalGraph g = CausalGraph::empty(d, lm.names);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double v = lm.values(i, j);
      if (v == 1.0) {
        g.adjacency(i, j) = 1;
      } else if (v == 2.0) {
        if (i < j) g.undirected.insert({i, j});
      } else if (v != 0.0) {
        throw ValidationError("adjacency entries must be 0, 1 or 2 in " +
                              path);
      }
    }
  std::ifstream coef(path + ".coef");
  if (coef.good()) {
    coef.close();
    g.coefficients = read_labeled_matrix(path + ".coef").values;
  }
  g.validate();
  return g;
}

void write_prior(const std::string& path, const PriorKnowledge& pk) {
  std::vector<std::string> names;
  for (int k = 0; k < pk.dim(); ++k) names.push_back("x" + std::to_string(k + 1));
  write_labeled_matrix(path, names, pk.entries.cast<double>(),
                       "prior knowledge for " + method_name(pk.method) +
                           " (1=Forced, 0=Forbidden, -1=Unknown)");
}

PriorKnowledge read_prior(const std::string& path, Method method) {
  const LabeledMatrix lm = read_labeled_matrix(path);
  PriorKnowledge pk;
  pk.method = method;
  pk.entries = lm.values.cast<int>();
  pk.validate();
  return pk;
}

}  // namespace scp
