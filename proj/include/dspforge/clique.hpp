#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dspforge {

/// Simple undirected graph on vertices 1..n.
class CliqueGraph {
 public:
  CliqueGraph() = default;
  explicit CliqueGraph(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);  // dedups; throws on loops or out-of-range labels
  bool adjacent(int u, int v) const;
  /// Edges as (u, v) with u < v, sorted.
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<bool>> adj_;
};

/// Parses `p edge N M` / `e u v` text. Comment lines (`c ...`) and blank lines are skipped.
CliqueGraph parse_dimacs(std::string_view text);
std::string to_dimacs(const CliqueGraph& g);

/// Ordered pairs (a, b) for block (i, j): the diagonal when i == j,
/// otherwise every (a, b) with a-b an edge.
using SijRelation = std::set<std::pair<int, int>>;
SijRelation compute_sij(const CliqueGraph& g, int i, int j);

/// Membership test without materializing the relation.
bool in_sij(const CliqueGraph& g, int i, int j, int a, int b);

bool is_clique(const CliqueGraph& g, const std::vector<int>& z);

struct CliqueResult {
  int size = 0;
  std::vector<int> witness;
};

/// Exact maximum clique for n <= 20; lexicographically least witness among the largest.
CliqueResult max_clique_bruteforce(const CliqueGraph& g);

}  // namespace dspforge
