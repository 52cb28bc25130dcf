#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dspforge/canonical.hpp"
#include "dspforge/instance.hpp"

namespace dspforge {

// Path cost is the sum of the costs of all its vertices, endpoints included.

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct DistanceField {
  int source = 0;
  bool reverse = false;  // distances *to* `source` along edge directions
  std::vector<std::int64_t> dist;
  std::vector<std::vector<int>> preds;  // ascending vertex index
};

DistanceField shortest_distances(const Graph& g, int s);
DistanceField shortest_distances_to(const Graph& g, int t);

std::int64_t path_cost(const Graph& g, const std::vector<int>& vertices);

/// Union of all shortest source -> sink paths of one pair.
struct SpDag {
  int pair = 0;
  int source = 0, sink = 0;
  std::int64_t distance = 0;
  std::vector<std::vector<int>> succ;  // ascending; empty for vertices off the DAG
  std::vector<std::pair<int, int>> arcs;  // sorted

  bool contains(int v) const { return v == sink || !succ[v].empty(); }
};

/// Throws ErrorCode::Disconnected if the sink is unreachable.
SpDag shortest_path_dag(const DspInstance& inst, int pair);

/// All shortest paths in DFS order over ascending successors; std::nullopt if
/// there are more than `limit`.
std::optional<std::vector<std::vector<int>>> enumerate_shortest_paths(const SpDag& dag,
                                                                      std::size_t limit);

struct SolveOptions {
  Mode mode = Mode::Edge;
  int threads = 1;
  std::uint64_t budget = kDefaultBudget;  // search nodes plus enumerated paths
};

struct SolveResult {
  int count = 0;
  Solution solution;
  std::uint64_t nodes = 0;
};

/// Exact maximum number of simultaneously routable pairs by shortest paths.
/// Result and witness do not depend on `threads`. Throws ErrorCode::Budget.
SolveResult max_disjoint_shortest_paths(const DspInstance& inst, const SolveOptions& opts);

/// Reference enumerator: every concrete shortest path of every pair, every
/// subset and tuple. Throws ErrorCode::Budget past `limit` steps.
SolveResult naive_max_disjoint(const DspInstance& inst, Mode mode,
                               std::uint64_t limit = 200'000'000);

struct Verdict {
  bool accepted = true;
  std::string reason;
};

Verdict verify_solution(const DspInstance& inst, const Solution& sol, Mode mode);

struct CliqueExtraction {
  std::vector<int> good;    // indices i with both (a_i,b_i) and (c_i,d_i) routed
  std::vector<int> deltas;  // decoded column/row per good index
  std::vector<int> labels;  // sorted deltas
  bool is_clique = false;
};

/// Throws ErrorCode::Parameter if the solution is rejected and ErrorCode::Decode
/// if a routed path of a good index is not a canonical image or the two
/// decoded values of a good index differ.
CliqueExtraction extract_clique(const DspInstance& inst, const Solution& sol);

}  // namespace dspforge
