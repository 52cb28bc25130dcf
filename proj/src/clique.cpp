#include "dspforge/clique.hpp"

#include <sstream>

#include "dspforge/error.hpp"

namespace dspforge {

CliqueGraph::CliqueGraph(int n) : n_(n), adj_(n + 1, std::vector<bool>(n + 1, false)) {
  if (n < 0) throw Error(ErrorCode::Parameter, "negative vertex count");
}

void CliqueGraph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw Error(ErrorCode::OutOfRange, "vertex label out of range: " + std::to_string(u) + " " +
                                           std::to_string(v));
  if (u == v) throw Error(ErrorCode::Parse, "self-loop on vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  edges_.emplace(u, v);
  adj_[u][v] = adj_[v][u] = true;
}

bool CliqueGraph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return adj_[u][v];
}

CliqueGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  CliqueGraph g;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      long n = -1, m = -1;
      if (have_header) fail("duplicate problem line");
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col") || n < 0 || m < 0)
        fail("expected 'p edge N M'");
      g = CliqueGraph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      long u = 0, v = 0;
      if (!have_header) fail("edge before problem line");
      if (!(ls >> u >> v)) fail("expected 'e u v'");
      std::string extra;
      if (ls >> extra) fail("trailing tokens");
      if (u < 1 || u > g.n() || v < 1 || v > g.n())
        throw Error(ErrorCode::OutOfRange,
                    "line " + std::to_string(lineno) + ": vertex out of range");
      if (u == v) fail("self-loop");
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing problem line");
  return g;
}

std::string to_dimacs(const CliqueGraph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.edges().size()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

bool in_sij(const CliqueGraph& g, int i, int j, int a, int b) {
  if (i == j) return a == b;
  return g.adjacent(a, b);
}

SijRelation compute_sij(const CliqueGraph& g, int i, int j) {
  SijRelation s;
  for (int a = 1; a <= g.n(); ++a)
    for (int b = 1; b <= g.n(); ++b)
      if (in_sij(g, i, j, a, b)) s.emplace(a, b);
  return s;
}

bool is_clique(const CliqueGraph& g, const std::vector<int>& z) {
  for (std::size_t x = 0; x < z.size(); ++x) {
    if (z[x] < 1 || z[x] > g.n()) return false;
    for (std::size_t y = x + 1; y < z.size(); ++y)
      if (!g.adjacent(z[x], z[y])) return false;
  }
  return true;
}

namespace {

// Depth-first extension in increasing label order, so the first clique found
// at a given size is the lexicographically least one.
void extend(const CliqueGraph& g, std::vector<int>& cur, int next, CliqueResult& best) {
  if (static_cast<int>(cur.size()) > best.size) {
    best.size = static_cast<int>(cur.size());
    best.witness = cur;
  }
  for (int v = next; v <= g.n(); ++v) {
    if (static_cast<int>(cur.size()) + (g.n() - v + 1) <= best.size) return;
    bool ok = true;
    for (int u : cur)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    extend(g, cur, v + 1, best);
    cur.pop_back();
  }
}

}  // namespace

CliqueResult max_clique_bruteforce(const CliqueGraph& g) {
  if (g.n() > 20) throw Error(ErrorCode::Parameter, "brute-force clique limited to 20 vertices");
  CliqueResult best;
  std::vector<int> cur;
  extend(g, cur, 1, best);
  return best;
}

}  // namespace dspforge
