#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dspforge/instance.hpp"

namespace dspforge {

// ---- directed --------------------------------------------------------------

/// k x k blocks of N x N grids with rightward/upward edges, red matchings
/// between neighbouring blocks and magenta terminal fans. All costs 1.
DspInstance build_d_int(const CliqueGraph& g, int k);
DspInstance split_edge_directed(const DspInstance& d_int);
DspInstance split_vertex_directed(const DspInstance& d_int);
/// Replaces each terminal fan with a binary tree whose leaves all sit at depth ceil(log2 N).
DspInstance reduce_degree_directed(const DspInstance& inst);

// ---- undirected ------------------------------------------------------------

/// Undirected analogue of build_d_int; green vertices cost 2kN.
DspInstance build_u_int(const CliqueGraph& g, int k);
DspInstance split_edge_undirected(const DspInstance& u_int);
DspInstance split_vertex_undirected(const DspInstance& u_int);
/// Subdivides every fan edge with 2kN-1 unit vertices and sets green costs to 1.
DspInstance unit_cost_reduction(const DspInstance& inst);

// ---- shared ----------------------------------------------------------------

/// Builds the requested variant and applies the requested gadgets.
DspInstance generate(const CliqueGraph& g, int k, Variant variant, GadgetFlags flags = {});

/// Number of grid points (i, j, q, l) with (q, l) in S_{i,j}.
std::int64_t count_two_splits(const CliqueGraph& g, int k);

/// Vertex count predicted from the split counts alone.
std::int64_t expected_vertex_count(const CliqueGraph& g, int k, Variant variant, GadgetFlags flags);

/// ceil(log2 n) for n >= 1.
int tree_height(int n);

/// Internal (non-terminal, non-leaf) tree vertices added per terminal by degree reduction.
std::int64_t tree_internal_count(int n);

/// Leaf slot (1..N) of the grid vertex a terminal's fan attaches to.
int fan_slot(TerminalRole owner, const GridId& leaf);

/// Edge pairs that cross in the vertex-split drawing: for every split grid point,
/// the edge entering w_Ver from the south and the edge leaving w_Hor eastward.
std::vector<std::pair<int, int>> structural_crossings(const Graph& g, Variant variant);

}  // namespace dspforge
