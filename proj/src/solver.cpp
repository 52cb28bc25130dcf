#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <map>
#include <thread>
#include <tuple>

#include "dspforge/error.hpp"
#include "dspforge/solver.hpp"

namespace dspforge {

namespace {

// A shortest path with every interchangeable route vertex left open. Two
// routes are interchangeable when they are degree-2 vertices with the same
// two neighbours and the same cost (e.g. w_Hor/w_Ver of a diamond); which one
// a path uses only matters for how many paths share the pair of ports.
struct AbstractPath {
  std::vector<int> tokens;     // vertex index, or -(key + 1) for an open route
  std::vector<int> resources;  // concrete edges or vertices, sorted
  std::vector<int> keys;       // sorted
};

struct Model {
  int pair_count = 0;
  std::vector<std::vector<AbstractPath>> paths;
  std::vector<std::vector<int>> key_members;
  int resource_count = 0;
  std::uint64_t work = 0;
};

class ModelBuilder {
 public:
  ModelBuilder(const DspInstance& inst, Mode mode, std::uint64_t budget)
      : inst_(inst), g_(inst.graph), mode_(mode), budget_(budget) {}

  Model build() {
    classify_routes();
    assign_resources();
    model_.pair_count = static_cast<int>(inst_.pairs.size());
    model_.paths.resize(model_.pair_count);
    for (int p = 0; p < model_.pair_count; ++p) {
      std::optional<SpDag> dag;
      try {
        dag = shortest_path_dag(inst_, p);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Disconnected) throw;
        continue;
      }
      dag_ = &*dag;
      out_ = &model_.paths[p];
      tokens_.assign(1, dag->source);
      walk(dag->source);
    }
    return std::move(model_);
  }

 private:
  void classify_routes() {
    const int n = static_cast<int>(g_.vertex_count());
    std::vector<char> terminal(n, 0), route(n, 0);
    for (const auto& tp : inst_.pairs) terminal[tp.source] = terminal[tp.sink] = 1;
    for (int v = 0; v < n; ++v) {
      if (terminal[v]) continue;
      route[v] = g_.directed() ? g_.in(v).size() == 1 && g_.out(v).size() == 1
                               : g_.out(v).size() == 2;
    }
    key_of_.assign(n, -1);
    std::map<std::tuple<int, int, std::int64_t>, int> keys;
    for (int v = 0; v < n; ++v) {
      if (!route[v]) continue;
      int a = g_.directed() ? g_.in(v)[0].to : g_.out(v)[0].to;
      int b = g_.directed() ? g_.out(v)[0].to : g_.out(v)[1].to;
      if (route[a] || route[b]) continue;
      if (!g_.directed() && a > b) std::swap(a, b);
      auto [it, fresh] = keys.emplace(std::tuple{a, b, g_.cost(v)}, model_.key_members.size());
      if (fresh) model_.key_members.emplace_back();
      model_.key_members[it->second].push_back(v);
      key_of_[v] = it->second;
    }
  }

  void assign_resources() {
    if (mode_ == Mode::Vertex) {
      resource_of_.assign(g_.vertex_count(), -1);
      for (int v = 0; v < static_cast<int>(g_.vertex_count()); ++v)
        if (key_of_[v] < 0) resource_of_[v] = model_.resource_count++;
    } else {
      resource_of_.assign(g_.edge_count(), -1);
      for (int e = 0; e < static_cast<int>(g_.edge_count()); ++e)
        if (key_of_[g_.edge(e).from] < 0 && key_of_[g_.edge(e).to] < 0)
          resource_of_[e] = model_.resource_count++;
    }
  }

  void walk(int u) {
    if (u == dag_->sink) {
      emit();
      return;
    }
    std::vector<int> seen;
    for (int v : dag_->succ[u]) {
      const int key = key_of_[v];
      if (key < 0) {
        tokens_.push_back(v);
        walk(v);
        tokens_.pop_back();
        continue;
      }
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      for (int w : dag_->succ[v]) {
        tokens_.push_back(-(key + 1));
        tokens_.push_back(w);
        walk(w);
        tokens_.pop_back();
        tokens_.pop_back();
      }
    }
  }

  void emit() {
    if (++model_.work > budget_)
      throw Error(ErrorCode::Budget, "budget of " + std::to_string(budget_) +
                                         " exhausted while enumerating shortest paths");
    AbstractPath p;
    p.tokens = tokens_;
    for (std::size_t s = 0; s < tokens_.size(); ++s) {
      const int t = tokens_[s];
      if (t < 0) {
        p.keys.push_back(-t - 1);
        continue;
      }
      if (mode_ == Mode::Vertex) {
        p.resources.push_back(resource_of_[t]);
      } else if (s > 0 && tokens_[s - 1] >= 0) {
        p.resources.push_back(resource_of_[*g_.find_edge(tokens_[s - 1], t)]);
      }
    }
    std::sort(p.resources.begin(), p.resources.end());
    std::sort(p.keys.begin(), p.keys.end());
    out_->push_back(std::move(p));
  }

  const DspInstance& inst_;
  const Graph& g_;
  Mode mode_;
  std::uint64_t budget_;
  Model model_;
  std::vector<int> key_of_, resource_of_;
  const SpDag* dag_ = nullptr;
  std::vector<AbstractPath>* out_ = nullptr;
  std::vector<int> tokens_;
};

struct TaskResult {
  int best = -1;
  std::vector<int> choice;  // per pair: path index or -1
  std::uint64_t nodes = 0;
  bool aborted = false;
};

// Depth-first over pairs in index order; each pair first tries its paths in
// order, then is skipped. The first solution of maximum size wins.
class Searcher {
 public:
  Searcher(const Model& m, std::uint64_t cap)
      : m_(m), cap_(cap), used_(m.resource_count, 0), key_used_(m.key_members.size(), 0),
        chosen_(m.pair_count, -1) {}

  TaskResult run(int first_choice) {
    if (first_choice >= 0) {
      apply(m_.paths[0][first_choice], 1);
      chosen_[0] = first_choice;
      dfs(1, 1);
    } else {
      dfs(1, 0);
    }
    res_.nodes = nodes_;
    res_.aborted = aborted_;
    return res_;
  }

 private:
  bool compatible(const AbstractPath& p) const {
    for (int r : p.resources)
      if (used_[r]) return false;
    for (int k : p.keys)
      if (key_used_[k] >= static_cast<int>(m_.key_members[k].size())) return false;
    return true;
  }

  void apply(const AbstractPath& p, int delta) {
    for (int r : p.resources) used_[r] = static_cast<char>(used_[r] + delta);
    for (int k : p.keys) key_used_[k] += delta;
  }

  void dfs(int p, int count) {
    if (aborted_ || done_) return;
    if (++nodes_ > cap_) {
      aborted_ = true;
      return;
    }
    if (count > res_.best) {
      res_.best = count;
      res_.choice = chosen_;
      if (count == m_.pair_count) {
        done_ = true;
        return;
      }
    }
    if (p == m_.pair_count || count + (m_.pair_count - p) <= res_.best) return;
    // Prune if too few later pairs still have a compatible path; stop
    // scanning as soon as enough of them do.
    int possible = 0;
    for (int q = p; q < m_.pair_count && count + possible <= res_.best; ++q)
      for (const auto& path : m_.paths[q])
        if (compatible(path)) {
          ++possible;
          break;
        }
    if (count + possible <= res_.best) return;

    const auto& paths = m_.paths[p];
    for (int idx = 0; idx < static_cast<int>(paths.size()); ++idx) {
      if (!compatible(paths[idx])) continue;
      apply(paths[idx], 1);
      chosen_[p] = idx;
      dfs(p + 1, count + 1);
      chosen_[p] = -1;
      apply(paths[idx], -1);
      if (aborted_ || done_) return;
    }
    dfs(p + 1, count);
  }

  const Model& m_;
  std::uint64_t cap_;
  std::vector<char> used_;
  std::vector<int> key_used_;
  std::vector<int> chosen_;
  TaskResult res_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false, done_ = false;
};

Solution materialize(const Model& m, const std::vector<int>& choice, Mode mode) {
  Solution sol;
  sol.mode = mode;
  std::vector<std::size_t> next_member(m.key_members.size(), 0);
  for (int p = 0; p < m.pair_count; ++p) {
    if (choice[p] < 0) continue;
    PathWitness w;
    w.pair = p;
    for (int t : m.paths[p][choice[p]].tokens) {
      if (t >= 0) {
        w.vertices.push_back(t);
      } else {
        const int key = -t - 1;
        w.vertices.push_back(m.key_members[key][next_member[key]++]);
      }
    }
    sol.paths.push_back(std::move(w));
  }
  return sol;
}

}  // namespace

SolveResult max_disjoint_shortest_paths(const DspInstance& inst, const SolveOptions& opts) {
  Model model = ModelBuilder(inst, opts.mode, opts.budget).build();
  const int pairs = model.pair_count;
  const std::uint64_t cap = opts.budget - std::min(opts.budget, model.work);

  // Subtree t < |paths[0]| routes pair 0 along path t; the last subtree skips it.
  const int tasks = static_cast<int>(model.paths[0].size()) + 1;
  std::vector<TaskResult> results(tasks);
  std::vector<char> ran(tasks, 0);
  std::atomic<int> next{0};
  std::atomic<int> first_full{INT_MAX};
  auto worker = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= tasks || t > first_full.load()) return;
      Searcher s(model, cap);
      results[t] = s.run(t + 1 < tasks ? t : -1);
      ran[t] = 1;
      if (results[t].best == pairs) {
        int cur = first_full.load();
        while (t < cur && !first_full.compare_exchange_weak(cur, t)) {
        }
      }
      if (results[t].aborted) return;
    }
  };
  const int threads = std::clamp(opts.threads, 1, tasks);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SolveResult out;
  out.nodes = model.work;
  int best_task = -1;
  for (int t = 0; t < tasks; ++t) {
    if (!ran[t] || results[t].aborted || out.nodes + results[t].nodes > opts.budget)
      throw Error(ErrorCode::Budget,
                  "search budget of " + std::to_string(opts.budget) + " nodes exhausted (" +
                      std::to_string(inst.graph.vertex_count()) + " vertices, " +
                      std::to_string(inst.graph.edge_count()) + " edges, " +
                      std::to_string(pairs) + " pairs)");
    out.nodes += results[t].nodes;
    if (best_task < 0 || results[t].best > results[best_task].best) best_task = t;
    if (results[t].best == pairs) break;
  }
  out.count = results[best_task].best;
  out.solution = materialize(model, results[best_task].choice, opts.mode);
  return out;
}

SolveResult naive_max_disjoint(const DspInstance& inst, Mode mode, std::uint64_t limit) {
  const Graph& g = inst.graph;
  const int pairs = static_cast<int>(inst.pairs.size());
  std::vector<std::vector<std::vector<int>>> paths(pairs);
  std::vector<std::vector<std::vector<int>>> uses(pairs);
  for (int p = 0; p < pairs; ++p) {
    std::optional<SpDag> dag;
    try {
      dag = shortest_path_dag(inst, p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Disconnected) throw;
      continue;
    }
    auto all = enumerate_shortest_paths(*dag, limit);
    if (!all) throw Error(ErrorCode::Budget, "too many shortest paths for the naive enumerator");
    paths[p] = std::move(*all);
    for (const auto& path : paths[p]) {
      std::vector<int> u;
      if (mode == Mode::Vertex) {
        u = path;
      } else {
        for (std::size_t s = 1; s < path.size(); ++s) u.push_back(*g.find_edge(path[s - 1], path[s]));
      }
      uses[p].push_back(std::move(u));
    }
  }

  const std::size_t slots = mode == Mode::Vertex ? g.vertex_count() : g.edge_count();
  std::vector<int> taken(slots, 0);
  std::vector<int> chosen(pairs, -1), best_choice(pairs, -1);
  int best = -1;
  std::uint64_t steps = 0;

  std::function<void(int, int)> rec = [&](int p, int count) {
    if (++steps > limit) throw Error(ErrorCode::Budget, "naive enumerator step limit reached");
    if (count > best) {
      best = count;
      best_choice = chosen;
    }
    if (p == pairs) return;
    for (int idx = 0; idx < static_cast<int>(uses[p].size()); ++idx) {
      const auto& u = uses[p][idx];
      bool free = std::all_of(u.begin(), u.end(), [&](int r) { return taken[r] == 0; });
      if (!free) continue;
      for (int r : u) ++taken[r];
      chosen[p] = idx;
      rec(p + 1, count + 1);
      chosen[p] = -1;
      for (int r : u) --taken[r];
    }
    rec(p + 1, count);
  };
  rec(0, 0);

  SolveResult out;
  out.count = best;
  out.nodes = steps;
  out.solution.mode = mode;
  for (int p = 0; p < pairs; ++p)
    if (best_choice[p] >= 0) out.solution.paths.push_back({p, paths[p][best_choice[p]]});
  return out;
}

}  // namespace dspforge
