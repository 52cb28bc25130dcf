#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dspforge/clique.hpp"
#include "dspforge/graph.hpp"

namespace dspforge {

enum class Variant { DInt, DEdge, DVertex, UInt, UEdge, UVertex };

enum class Mode { Edge, Vertex };

struct GadgetFlags {
  bool degree_reduced = false;
  bool unit_cost = false;
};

struct TerminalPair {
  int source = 0, sink = 0;  // dense vertex indices
};

/// A generated disjoint-shortest-paths instance.
/// Pair order is (a_1,b_1)..(a_k,b_k), then (c_1,d_1)..(c_k,d_k).
struct DspInstance {
  Graph graph;
  Variant variant = Variant::DInt;
  int n = 0, k = 0;
  GadgetFlags flags;
  CliqueGraph source;
  std::vector<TerminalPair> pairs;
  /// Edge-index pairs the construction's drawing is expected to cross.
  std::vector<std::pair<int, int>> crossings;
};

std::string to_string(Variant v);
std::string to_string(Mode m);
Variant parse_variant(std::string_view text);  // throws ErrorCode::Parameter
Mode parse_mode(std::string_view text);

bool is_directed(Variant v);
bool is_intermediate(Variant v);
bool is_edge_split(Variant v);
bool is_vertex_split(Variant v);
/// Disjointness the variant is built for; intermediate variants have none.
std::optional<Mode> native_mode(Variant v);

/// Pair index helpers (0-based pair slots).
inline int vertical_pair(int /*k*/, int i) { return i - 1; }
inline int horizontal_pair(int k, int j) { return k + j - 1; }

}  // namespace dspforge
