#include "dspforge/verify.hpp"

#include <set>

#include <json.hpp>

#include "dspforge/canonical.hpp"
#include "dspforge/error.hpp"
#include "dspforge/io.hpp"
#include "dspforge/reduction.hpp"
#include "dspforge/solver.hpp"

namespace dspforge {

namespace {

Check pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::Pass, std::move(detail)};
}
Check fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Fail, std::move(detail)};
}
Check skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::NotApplicable, std::move(detail)};
}
Check verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

Check check_terminals(const DspInstance& inst) {
  const Graph& g = inst.graph;
  if (static_cast<int>(inst.pairs.size()) != 2 * inst.k)
    return fail("terminals", "expected " + std::to_string(2 * inst.k) + " pairs");
  std::set<int> seen;
  for (int p = 0; p < 2 * inst.k; ++p) {
    const bool vertical = p < inst.k;
    const int x = vertical ? p + 1 : p - inst.k + 1;
    const TerminalId s{vertical ? TerminalRole::A : TerminalRole::C, x};
    const TerminalId t{vertical ? TerminalRole::B : TerminalRole::D, x};
    const auto& tp = inst.pairs[p];
    if (!(g.id(tp.source) == VertexId{s}) || !(g.id(tp.sink) == VertexId{t}))
      return fail("terminals", "pair " + std::to_string(p) + " is not (" + to_string(VertexId{s}) +
                                   ", " + to_string(VertexId{t}) + ")");
    for (int v : {tp.source, tp.sink}) {
      if (g.vertex(v).color != VertexColor::Green)
        return fail("terminals", to_string(g.id(v)) + " is not green");
      if (!seen.insert(v).second) return fail("terminals", to_string(g.id(v)) + " repeats");
    }
  }
  return pass("terminals", std::to_string(inst.pairs.size()) + " pairs");
}

Check check_costs(const DspInstance& inst) {
  const std::int64_t green =
      is_directed(inst.variant) || inst.flags.unit_cost ? 1 : 2LL * inst.k * inst.n;
  for (const Vertex& v : inst.graph.vertices()) {
    const std::int64_t want = v.color == VertexColor::Green ? green : 1;
    if (v.cost != want)
      return fail("cost-model", to_string(v.id) + " costs " + std::to_string(v.cost) +
                                    ", expected " + std::to_string(want));
  }
  return pass("cost-model", "black 1, green " + std::to_string(green));
}

Check check_size(const DspInstance& inst) {
  const auto want = expected_vertex_count(inst.source, inst.k, inst.variant, inst.flags);
  const auto have = static_cast<std::int64_t>(inst.graph.vertex_count());
  return verdict("size-formula", want == have,
                 std::to_string(have) + " vertices, formula " + std::to_string(want));
}

Check check_dag(const DspInstance& inst) {
  if (!inst.graph.directed()) return skip("dag", "undirected");
  auto order = topological_order(inst.graph);
  if (auto c = std::get_if<CycleError>(&order))
    return fail("dag", "cycle through " + to_string(inst.graph.id(c->cycle.front())));
  return pass("dag");
}

Check check_planar(const DspInstance& inst) {
  if (is_vertex_split(inst.variant)) return skip("planar", "1-planar variant");
  return verdict("planar", is_planar(inst.graph), "");
}

Check check_embedding(const DspInstance& inst) {
  const std::string name = "one-planar-embedding";
  CrossingStats cs;
  try {
    cs = crossing_count(inst.graph);
  } catch (const Error& e) {
    return fail(name, e.what());
  }
  std::string detail = std::to_string(cs.total) + " crossings, max " +
                       std::to_string(cs.per_edge_max) + " per edge";
  if (cs.pairs != inst.crossings) return fail(name, detail + ", differs from declared crossings");
  if (!is_vertex_split(inst.variant)) {
    if (cs.total != 0) return fail(name, detail + " in a drawing meant to be plane");
    return skip(name, "plane drawing (0 crossings)");
  }
  const auto splits = count_two_splits(inst.source, inst.k);
  if (cs.per_edge_max > 1) return fail(name, detail);
  if (static_cast<std::int64_t>(cs.total) != splits)
    return fail(name, detail + ", expected one per split point (" + std::to_string(splits) + ")");
  return pass(name, detail);
}

Check check_degree(const DspInstance& inst) {
  const DegreeStats d = degree_stats(inst.graph);
  if (inst.flags.degree_reduced)
    return verdict("degree", d.max_in <= 2 && d.max_out <= 2,
                   "max in " + std::to_string(d.max_in) + ", max out " + std::to_string(d.max_out));
  if (inst.flags.unit_cost)
    return verdict("degree", d.max_degree <= 4, "max degree " + std::to_string(d.max_degree));
  return skip("degree", "no gadget reduction applied");
}

bool in_level(const VertexId& id, bool vertical, int x) {
  if (auto g = as_grid(id)) return vertical ? g->i == x : g->j == x;
  const TerminalId* t = as_terminal(id);
  if (!t) t = &std::get<AuxId>(id).owner;
  const bool t_vertical = t->role == TerminalRole::A || t->role == TerminalRole::B;
  return t_vertical == vertical && t->index == x;
}

Check check_levels(const DspInstance& inst) {
  const Graph& g = inst.graph;
  if (!g.directed()) return skip("level-containment", "undirected");
  const int n = static_cast<int>(g.vertex_count());
  auto reach = [&](int root, bool backward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Arc& a : backward ? g.in(u) : g.out(u))
        if (!seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  };
  for (int p = 0; p < static_cast<int>(inst.pairs.size()); ++p) {
    const bool vertical = p < inst.k;
    const int x = vertical ? p + 1 : p - inst.k + 1;
    auto fwd = reach(inst.pairs[p].source, false);
    auto bwd = reach(inst.pairs[p].sink, true);
    for (int v = 0; v < n; ++v)
      if (fwd[v] && bwd[v] && !in_level(g.id(v), vertical, x))
        return fail("level-containment",
                    to_string(g.id(v)) + " lies between the terminals of pair " + std::to_string(p));
  }
  return pass("level-containment");
}

Check check_canonical(const DspInstance& inst, const VerifyOptions& opts) {
  const std::string name = "canonical-shortest";
  std::size_t enumerated = 0, distance_only = 0;
  for (int p = 0; p < static_cast<int>(inst.pairs.size()); ++p) {
    const Orientation o = p < inst.k ? Orientation::Vertical : Orientation::Horizontal;
    const int x = p < inst.k ? p + 1 : p - inst.k + 1;
    std::optional<SpDag> dag;
    try {
      dag = shortest_path_dag(inst, p);
    } catch (const Error& e) {
      return fail(name, e.what());
    }
    std::set<std::vector<int>> images;
    for (int r = 1; r <= inst.n; ++r) {
      PathWitness w = canonical_path(inst, {o, x, r, {}});
      if (!is_valid_walk(inst, w.vertices))
        return fail(name, "pair " + std::to_string(p) + " row/column " + std::to_string(r) +
                              ": canonical path is broken");
      const auto cost = path_cost(inst.graph, w.vertices);
      if (cost != dag->distance)
        return fail(name, "pair " + std::to_string(p) + " row/column " + std::to_string(r) +
                              ": canonical cost " + std::to_string(cost) + ", distance " +
                              std::to_string(dag->distance));
      for (auto& img : canonical_images(inst, o, x, r)) images.insert(std::move(img.vertices));
    }
    auto all = enumerate_shortest_paths(*dag, opts.enumeration_limit);
    if (!all) {
      ++distance_only;
      continue;
    }
    ++enumerated;
    std::set<std::vector<int>> shortest(all->begin(), all->end());
    if (shortest != images)
      return fail(name, "pair " + std::to_string(p) + ": " + std::to_string(shortest.size()) +
                            " shortest paths vs " + std::to_string(images.size()) +
                            " canonical images");
  }
  std::string detail = std::to_string(enumerated) + " pairs enumerated";
  if (distance_only) detail += ", " + std::to_string(distance_only) + " distance-only";
  return pass(name, detail);
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const Check& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

VerificationReport verify_instance(const DspInstance& inst, const VerifyOptions& opts) {
  VerificationReport r;
  r.fingerprint = fingerprint(inst);
  r.variant = inst.variant;
  r.n = inst.n;
  r.k = inst.k;
  r.flags = inst.flags;
  r.checks.push_back(verdict("simple", is_simple(inst.graph), ""));
  r.checks.push_back(check_terminals(inst));
  if (r.checks.back().status == CheckStatus::Fail) return r;  // later checks index pairs
  r.checks.push_back(check_costs(inst));
  r.checks.push_back(check_size(inst));
  r.checks.push_back(check_dag(inst));
  r.checks.push_back(check_planar(inst));
  r.checks.push_back(check_embedding(inst));
  r.checks.push_back(check_degree(inst));
  r.checks.push_back(check_levels(inst));
  r.checks.push_back(check_canonical(inst, opts));
  return r;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  nlohmann::json j = {{"fingerprint", r.fingerprint},
                      {"variant", to_string(r.variant)},
                      {"N", r.n},
                      {"k", r.k},
                      {"flags", {{"degree_reduced", r.flags.degree_reduced},
                                 {"unit_cost", r.flags.unit_cost}}},
                      {"all_pass", r.all_pass()},
                      {"checks", std::move(checks)}};
  return j.dump();
}

}  // namespace dspforge
