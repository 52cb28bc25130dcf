#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dspforge/ids.hpp"

namespace dspforge {

enum class VertexColor : std::uint8_t { Black, Green };
enum class EdgeColor : std::uint8_t { Black, Red, Magenta };

struct Point {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Vertex {
  VertexId id;
  std::int64_t cost = 1;
  VertexColor color = VertexColor::Black;
  std::optional<Point> pos;
};

/// Edge as stored: `from -> to` for directed graphs; for undirected graphs
/// the orientation is only the construction's drawing order.
struct Edge {
  int from = 0, to = 0;
  EdgeColor color = EdgeColor::Black;
};

/// Incidence record: neighbour vertex plus the edge index.
struct Arc {
  int to = 0;
  int edge = 0;
};

class GraphBuilder;

/// Immutable vertex-weighted simple graph. Vertices are densely numbered in
/// lexicographic order of their structured ids; edges are sorted by
/// (from, to) on those dense indices.
class Graph {
 public:
  Graph() = default;

  bool directed() const { return directed_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  const VertexId& id(int v) const { return vertices_[v].id; }
  std::int64_t cost(int v) const { return vertices_[v].cost; }
  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Successors (directed) or neighbours (undirected).
  std::span<const Arc> out(int v) const { return out_[v]; }
  /// Predecessors (directed) or neighbours (undirected).
  std::span<const Arc> in(int v) const { return in_[v]; }

  std::optional<int> find(const VertexId& id) const;
  int index_of(const VertexId& id) const;  // throws if absent
  /// Edge index of u->v (or u-v when undirected).
  std::optional<int> find_edge(int u, int v) const;

 private:
  friend class GraphBuilder;
  bool directed_ = true;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_, in_;
  std::map<VertexId, int> index_;
};

/// Collects vertices/edges by structured id, then freezes into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed) : directed_(directed) {}

  void add_vertex(Vertex v);
  void add_edge(const VertexId& from, const VertexId& to, EdgeColor color);
  bool has_vertex(const VertexId& id) const { return vertices_.contains(id); }
  Vertex& vertex(const VertexId& id);

  /// Throws ErrorCode::Schema on loops, parallel edges or dangling endpoints.
  Graph build() const;

 private:
  struct PendingEdge {
    VertexId from, to;
    EdgeColor color;
  };
  bool directed_;
  std::map<VertexId, Vertex> vertices_;
  std::vector<PendingEdge> edges_;
};

// ---- structural queries --------------------------------------------------

struct CycleError {
  std::vector<int> cycle;  // v0 -> v1 -> ... -> v0 (first vertex not repeated)
};

/// Kahn's algorithm with a min-index queue, so the order is deterministic.
/// Returns the order, or a witness cycle.
std::variant<std::vector<int>, CycleError> topological_order(const Graph& g);

/// Combinatorial planarity test on the underlying undirected simple graph.
bool is_planar(const Graph& g);

/// Embedding hint: per-vertex positions come from the graph; crossings are the
/// pairs of edge indices the construction declares as crossing.
struct EmbeddingHint {
  std::vector<std::pair<int, int>> declared_crossings;
};

struct CrossingStats {
  std::size_t total = 0;     // crossing pairs among non-adjacent edges
  std::size_t per_edge_max = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted (e1 < e2)
};

/// Straight-line crossing count under the vertex positions stored in `g`.
/// Throws ErrorCode::MissingPosition if any vertex lacks a position.
CrossingStats crossing_count(const Graph& g);

struct DegreeStats {
  std::size_t max_in = 0, max_out = 0, max_degree = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Simple-graph check (the builder already enforces it; kept for loaded graphs).
bool is_simple(const Graph& g);

}  // namespace dspforge
