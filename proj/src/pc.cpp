#include "scp/scd/pc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace scp {

namespace {

Eigen::MatrixXd correlation_matrix(const Dataset& data) {
  const int n = data.n();
  Eigen::MatrixXd x = data.values;
  for (int j = 0; j < data.d(); ++j) x.col(j).array() -= x.col(j).mean();
  Eigen::MatrixXd cov = (x.transpose() * x) / n;
  Eigen::VectorXd sd = cov.diagonal().array().sqrt();
  Eigen::MatrixXd corr = cov;
  for (int i = 0; i < corr.rows(); ++i)
    for (int j = 0; j < corr.cols(); ++j) corr(i, j) /= sd(i) * sd(j);
  return corr;
}

std::string describe_set(const std::vector<int>& cond) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < cond.size(); ++k)
    out << (k ? "," : "") << cond[k];
  out << "}";
  return out.str();
}

void combinations(const std::vector<int>& items, int k, std::size_t start,
                  std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t idx = start; idx < items.size(); ++idx) {
    current.push_back(items[idx]);
    combinations(items, k, idx + 1, current, out);
    current.pop_back();
  }
}

// Mixed-graph state during orientation. dir(i, j) means edge i -> j.
struct PcState {
  int d = 0;
  std::vector<std::vector<bool>> dir;
  std::vector<std::vector<bool>> und;
  const PriorKnowledge* pk = nullptr;

  bool forbidden(int from, int to) const {
    return pk && pk->entries(to, from) == kForbidden;
  }
  bool forced(int from, int to) const {
    return pk && pk->entries(to, from) == kForced;
  }
  bool adjacent(int a, int b) const {
    return und[a][b] || dir[a][b] || dir[b][a];
  }

  bool creates_cycle(int from, int to) const {
    // Directed path to -> ... -> from?
    std::vector<bool> seen(d, false);
    std::vector<int> stack{to};
    seen[to] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (u == from) return true;
      for (int v = 0; v < d; ++v)
        if (dir[u][v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return false;
  }

  // Orients an existing undirected edge; refuses forbidden directions,
  // reversals of existing arrows and orientations that close a cycle.
  bool orient(int from, int to) {
    if (dir[from][to]) return false;
    if (!und[from][to]) return false;
    if (forbidden(from, to)) return false;
    if (creates_cycle(from, to)) return false;
    und[from][to] = und[to][from] = false;
    dir[from][to] = true;
    return true;
  }
};

}  // namespace

double fisher_z_pvalue(const Eigen::MatrixXd& corr, int n, int i, int j,
                       const std::vector<int>& cond) {
  double r = 0.0;
  if (cond.empty()) {
    r = corr(i, j);
  } else {
    std::vector<int> sel = {i, j};
    sel.insert(sel.end(), cond.begin(), cond.end());
    const int m = static_cast<int>(sel.size());
    Eigen::MatrixXd sub(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) sub(a, b) = corr(sel[a], sel[b]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible())
      throw NumericalError(
          "singular correlation submatrix while testing x" +
          std::to_string(i + 1) + " _||_ x" + std::to_string(j + 1) +
          " given " + describe_set(cond));
    const Eigen::MatrixXd prec = lu.inverse();
    r = -prec(0, 1) / std::sqrt(prec(0, 0) * prec(1, 1));
  }
  r = std::clamp(r, -0.9999999, 0.9999999);
  const double dof = n - static_cast<double>(cond.size()) - 3.0;
  if (dof <= 0.0) return 1.0;
  const double z = 0.5 * std::log((1.0 + r) / (1.0 - r));
  const double stat = std::sqrt(dof) * std::abs(z);
  return std::erfc(stat / std::sqrt(2.0));
}

CausalGraph pc_discover(const Dataset& data, double alpha,
                        const std::optional<PriorKnowledge>& pk) {
  if (!data.standardized)
    throw ValidationError("pc_discover requires a standardized dataset");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("significance level must lie in (0, 1)");
  const int d = data.d();
  if (pk) {
    pk->validate();
    if (pk->dim() != d)
      throw ValidationError("prior knowledge dimension mismatch");
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (pk->entries(i, j) == kForced && pk->entries(j, i) == kForced)
          throw ValidationError("prior knowledge forces a 2-cycle");
  }

  const Eigen::MatrixXd corr = correlation_matrix(data);
  const int n = data.n();

  PcState st;
  st.d = d;
  st.dir.assign(d, std::vector<bool>(d, false));
  st.und.assign(d, std::vector<bool>(d, false));
  st.pk = pk ? &*pk : nullptr;

  // Start complete, minus both-way-forbidden pairs; forced edges are fixed
  // arrows from the beginning and are never tested.
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      if (st.forced(a, b)) {
        st.dir[a][b] = true;
      } else if (st.forced(b, a)) {
        st.dir[b][a] = true;
      } else if (!(st.forbidden(a, b) && st.forbidden(b, a))) {
        st.und[a][b] = st.und[b][a] = true;
      }
    }

  std::vector<std::vector<std::set<int>>> sepset(
      d, std::vector<std::set<int>>(d));

  // PC-stable skeleton: adjacency snapshot per level, removals applied after
  // the sweep.
  for (int level = 0;; ++level) {
    std::vector<std::vector<int>> adj(d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (b != a && st.adjacent(a, b)) adj[a].push_back(b);

    bool any_candidate = false;
    std::vector<std::pair<int, int>> to_remove;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (!st.und[a][b]) continue;  // forced/absent pairs are not tested
        bool separated = false;
        for (int side = 0; side < 2 && !separated; ++side) {
          const int u = side == 0 ? a : b;
          const int v = side == 0 ? b : a;
          std::vector<int> pool;
          for (int w : adj[u])
            if (w != v) pool.push_back(w);
          if (static_cast<int>(pool.size()) < level) continue;
          any_candidate = true;
          std::vector<std::vector<int>> conds;
          std::vector<int> cur;
          combinations(pool, level, 0, cur, conds);
          for (const auto& cond : conds) {
            if (fisher_z_pvalue(corr, n, u, v, cond) > alpha) {
              sepset[a][b].insert(cond.begin(), cond.end());
              sepset[b][a] = sepset[a][b];
              separated = true;
              break;
            }
          }
        }
        if (separated) to_remove.push_back({a, b});
      }
    }
    for (const auto& [a, b] : to_remove) st.und[a][b] = st.und[b][a] = false;
    if (!any_candidate) break;
  }

  // Collider orientation: a - c - b with a, b nonadjacent and c outside
  // sepset(a, b).
  for (int c = 0; c < d; ++c) {
    for (int a = 0; a < d; ++a) {
      if (!st.und[a][c]) continue;
      for (int b = a + 1; b < d; ++b) {
        if (b == c || !st.und[b][c]) continue;
        if (st.adjacent(a, b)) continue;
        if (sepset[a][b].count(c)) continue;
        st.orient(a, c);
        st.orient(b, c);
      }
    }
  }

  // Meek propagation plus completion of singly forbidden undirected edges.
  bool changed = true;
  while (changed) {
    changed = false;
    // R1: a -> b, b - c, a and c nonadjacent  =>  b -> c.
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (!st.dir[a][b]) continue;
        for (int c = 0; c < d; ++c) {
          if (c == a || !st.und[b][c]) continue;
          if (st.adjacent(a, c)) continue;
          changed |= st.orient(b, c);
        }
      }
    // R2: a -> b -> c, a - c  =>  a -> c.
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) {
        if (!st.und[a][c]) continue;
        for (int b = 0; b < d; ++b) {
          if (st.dir[a][b] && st.dir[b][c]) {
            changed |= st.orient(a, c);
            break;
          }
        }
      }
    // R3: a - b, a - c, a - e, c -> b, e -> b, c and e nonadjacent => a -> b.
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (!st.und[a][b]) continue;
        for (int c = 0; c < d; ++c) {
          if (!st.und[a][c] || !st.dir[c][b]) continue;
          for (int e = c + 1; e < d; ++e) {
            if (!st.und[a][e] || !st.dir[e][b]) continue;
            if (st.adjacent(c, e)) continue;
            changed |= st.orient(a, b);
          }
        }
      }
    // Forbidden completion: an undirected edge whose one direction is
    // forbidden takes the allowed one.
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        if (!st.und[a][b]) continue;
        if (st.forbidden(a, b) && !st.forbidden(b, a))
          changed |= st.orient(b, a);
        else if (st.forbidden(b, a) && !st.forbidden(a, b))
          changed |= st.orient(a, b);
      }
  }

  CausalGraph g = CausalGraph::empty(d, data.variable_names);
  for (int from = 0; from < d; ++from)
    for (int to = 0; to < d; ++to)
      if (st.dir[from][to]) g.adjacency(to, from) = 1;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (st.und[a][b]) g.undirected.insert({a, b});
  g.validate();
  return g;
}

}  // namespace scp
