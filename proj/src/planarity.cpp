#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <set>

#include "dspforge/graph.hpp"

namespace dspforge {

bool is_planar(const Graph& g) {
  using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  UGraph ug(g.vertex_count());
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    auto key = std::pair{std::min(e.from, e.to), std::max(e.from, e.to)};
    if (seen.insert(key).second) boost::add_edge(key.first, key.second, ug);
  }
  return boost::boyer_myrvold_planarity_test(ug);
}

}  // namespace dspforge
