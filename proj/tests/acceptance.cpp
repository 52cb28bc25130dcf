// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Criterion 7 drives the command-line tool whose path
// is passed as the first argument.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "dspforge/canonical.hpp"
#include "dspforge/error.hpp"
#include "dspforge/io.hpp"
#include "dspforge/reduction.hpp"
#include "dspforge/solver.hpp"
#include "oracles.hpp"

using namespace dspforge;
namespace fs = std::filesystem;

namespace {

struct Config {
  Variant variant;
  GadgetFlags flags;
};

std::string describe(const Config& c) {
  std::string s = to_string(c.variant);
  if (c.flags.degree_reduced) s += "+degree-reduce";
  if (c.flags.unit_cost) s += "+unit-cost";
  return s;
}

const std::vector<Config>& all_configs() {
  static const std::vector<Config> configs = {
      {Variant::DInt, {}},           {Variant::DEdge, {}},
      {Variant::DVertex, {}},        {Variant::DEdge, {true, false}},
      {Variant::DVertex, {true, false}}, {Variant::UInt, {}},
      {Variant::UEdge, {}},          {Variant::UVertex, {}},
      {Variant::UInt, {false, true}}, {Variant::UEdge, {false, true}},
      {Variant::UVertex, {false, true}}};
  return configs;
}

const Variant kSplit[] = {Variant::DEdge, Variant::DVertex, Variant::UEdge, Variant::UVertex};
const Variant kPlain[] = {Variant::DInt, Variant::DEdge, Variant::DVertex,
                          Variant::UInt, Variant::UEdge, Variant::UVertex};

std::string where(const CliqueGraph& g, int k, const std::string& what) {
  std::ostringstream os;
  os << what << " N=" << g.n() << " k=" << k << " |E|=" << g.edges().size();
  return os.str();
}

// Collects failures grouped by kind; the first instance of each kind is kept.
class Criterion {
 public:
  Criterion(int id, std::string name) : id_(id), name_(std::move(name)) {}

  void check(bool ok, const std::string& kind, const std::string& detail) {
    ++checks_;
    if (ok) return;
    auto& [count, first] = failures_[kind];
    if (count++ == 0) first = detail;
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool passed() const { return failures_.empty(); }

  void report(double seconds) const {
    std::printf("criterion %d %s: %s (%zu checks, %.2f s)\n", id_, name_.c_str(),
                passed() ? "PASS" : "FAIL", checks_, seconds);
    for (const auto& [kind, f] : failures_)
      std::printf("  fail x%zu %s: %s\n", f.first, kind.c_str(), f.second.c_str());
    for (const auto& n : notes_) std::printf("  note: %s\n", n.c_str());
    std::fflush(stdout);
  }

 private:
  int id_;
  std::string name_;
  std::size_t checks_ = 0;
  std::map<std::string, std::pair<std::size_t, std::string>> failures_;
  std::vector<std::string> notes_;
};

std::vector<CliqueGraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  std::vector<CliqueGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    CliqueGraph g(n);
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) g.add_edge(slots[b].first, slots[b].second);
    out.push_back(std::move(g));
  }
  return out;
}

CliqueGraph planted(int n, int k, std::mt19937& rng, std::vector<int>& clique) {
  auto g = oracle::random_graph(n, 0.3, rng);
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  clique.assign(perm.begin(), perm.begin() + k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) g.add_edge(clique[a], clique[b]);
  return g;
}

CliqueGraph triangle_free(int n, std::mt19937& rng) {
  CliqueGraph g(n);
  std::vector<std::pair<int, int>> cand;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) cand.emplace_back(u, v);
  std::shuffle(cand.begin(), cand.end(), rng);
  for (auto [u, v] : cand) {
    bool closes = false;
    for (int w = 1; w <= n; ++w) closes |= g.adjacent(u, w) && g.adjacent(v, w);
    if (!closes) g.add_edge(u, v);
  }
  return g;
}

template <class F>
double timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1 -------------------------------------------------------------------

bool size_formulas() {
  Criterion c(1, "size-formulas");
  std::mt19937 rng(1001);
  double t = timed([&] {
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= 3; ++k)
        for (int trial = 0; trial < 10; ++trial) {
          auto g = oracle::random_graph(n, 0.5, rng);
          if (k > n) {
            bool rejected = false;
            try {
              build_d_int(g, k);
            } catch (const Error& e) {
              rejected = e.code() == ErrorCode::Parameter;
            }
            c.check(rejected, "k > N accepted", where(g, k, "d-int"));
            continue;
          }
          const std::int64_t base = 1LL * n * n * k * k + 4 * k;
          for (const Config& cfg : all_configs()) {
            auto inst = generate(g, k, cfg.variant, cfg.flags);
            auto got = static_cast<std::int64_t>(inst.graph.vertex_count());
            auto want = oracle::vertex_count(g, k, cfg.variant, cfg.flags);
            if (is_intermediate(cfg.variant) && !cfg.flags.unit_cost)
              c.check(got == base, "intermediate size", where(g, k, describe(cfg)));
            c.check(got == want, "size " + describe(cfg),
                    where(g, k, describe(cfg)) + " got " + std::to_string(got) + " want " +
                        std::to_string(want));
            c.check(expected_vertex_count(g, k, cfg.variant, cfg.flags) == want,
                    "library formula " + describe(cfg), where(g, k, describe(cfg)));
          }
        }
  });
  c.check(t < 5.0, "runtime", std::to_string(t) + " s");
  c.report(t);
  return c.passed();
}

// ---- 2 -------------------------------------------------------------------

bool structure() {
  Criterion c(2, "structural-claims");
  std::mt19937 rng(2002);
  double t = timed([&] {
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= std::min(n, 3); ++k)
        for (int trial = 0; trial < 10; ++trial) {
          auto g = oracle::random_graph(n, 0.5, rng);
          const auto splits = oracle::two_splits(g, k);
          for (const Config& cfg : all_configs()) {
            auto inst = generate(g, k, cfg.variant, cfg.flags);
            const auto& gr = inst.graph;
            const std::string at = where(g, k, describe(cfg));
            if (is_directed(cfg.variant))
              c.check(std::holds_alternative<std::vector<int>>(topological_order(gr)), "dag", at);
            if (!is_vertex_split(cfg.variant)) {
              c.check(is_planar(gr), "planar " + describe(cfg), at);
            } else {
              auto cs = crossing_count(gr);
              c.check(cs.per_edge_max <= 1, "crossings per edge " + describe(cfg),
                      at + " max " + std::to_string(cs.per_edge_max));
              c.check(cs.total == splits, "crossing total " + describe(cfg),
                      at + " got " + std::to_string(cs.total) + " want " + std::to_string(splits));
            }
            auto deg = degree_stats(gr);
            if (cfg.flags.degree_reduced)
              c.check(deg.max_in <= 2 && deg.max_out <= 2, "directed degree " + describe(cfg),
                      at + " in " + std::to_string(deg.max_in) + " out " +
                          std::to_string(deg.max_out));
            if (cfg.flags.unit_cost)
              c.check(deg.max_degree <= 4, "undirected degree " + describe(cfg),
                      at + " max degree " + std::to_string(deg.max_degree));
          }
        }
  });
  c.report(t);
  return c.passed();
}

// ---- 3 -------------------------------------------------------------------

bool canonical_equivalence() {
  Criterion c(3, "canonical-shortest-equivalence");
  double t = timed([&] {
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= std::min(n, 2); ++k)
        for (const auto& g : all_graphs(n))
          for (const Config& cfg : all_configs()) {
            auto inst = generate(g, k, cfg.variant, cfg.flags);
            const std::string at = where(g, k, describe(cfg));
            for (Orientation o : {Orientation::Horizontal, Orientation::Vertical})
              for (int idx = 1; idx <= k; ++idx) {
                const auto& p = inst.pairs[pair_index(inst, o, idx)];
                std::set<std::vector<int>> images;
                for (int r = 1; r <= n; ++r)
                  for (const auto& w : canonical_images(inst, o, idx, r)) images.insert(w.vertices);
                auto shortest = oracle::all_shortest_simple(inst.graph, p.source, p.sink);
                auto d = oracle::bellman_ford(inst.graph, p.source)[p.sink];
                auto canon = path_cost(inst.graph, canonical_path(inst, {o, idx, 1, {}}).vertices);
                c.check(shortest == images, "shortest set = images " + describe(cfg),
                        at + ": " + std::to_string(shortest.size()) + " shortest paths of cost " +
                            std::to_string(d) + ", " + std::to_string(images.size()) +
                            " images of cost " + std::to_string(canon));
                if (cfg.variant == Variant::DInt && !cfg.flags.degree_reduced)
                  c.check(d == 1LL * k * n + 2, "d-int length", at);
                if (cfg.variant == Variant::UInt && !cfg.flags.unit_cost)
                  c.check(d == 5LL * k * n, "u-int cost", at);
              }
          }
  });
  c.report(t);
  return c.passed();
}

// ---- 4 -------------------------------------------------------------------

bool completeness() {
  Criterion c(4, "completeness");
  std::mt19937 rng(4004);
  std::map<std::string, double> slowest;
  int budget_hits = 0;
  double t = timed([&] {
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= std::min(n, 3); ++k)
        for (int trial = 0; trial < 2; ++trial) {
          std::vector<int> clique;
          auto g = planted(n, k, rng, clique);
          for (Variant v : kSplit) {
            auto inst = generate(g, k, v);
            const std::string at = where(g, k, to_string(v));
            auto sol = completeness_witness(inst, clique);
            Verdict verdict = verify_solution(inst, sol, *native_mode(v));
            c.check(verdict.accepted, "witness " + to_string(v), at + ": " + verdict.reason);
            double s = timed([&] {
              try {
                auto r = max_disjoint_shortest_paths(inst, {*native_mode(v), 8, kDefaultBudget});
                c.check(r.count == 2 * k, "solver 2k " + to_string(v),
                        at + " got " + std::to_string(r.count));
              } catch (const Error& e) {
                if (e.code() != ErrorCode::Budget) throw;
                ++budget_hits;
              }
            });
            slowest[to_string(v)] = std::max(slowest[to_string(v)], s);
            if (n == 5 && k == 3) c.check(s < 60.0, "runtime " + to_string(v), at);
          }
        }
  });
  for (const auto& [v, s] : slowest) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "slowest %s solve %.2f s", v.c_str(), s);
    c.note(buf);
  }
  if (budget_hits) c.note(std::to_string(budget_hits) + " solves hit the node budget");
  c.report(t);
  return c.passed();
}

// ---- 5 -------------------------------------------------------------------

bool soundness() {
  Criterion c(5, "soundness");
  std::mt19937 rng(5005);
  double t = timed([&] {
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= std::min(n, 3); ++k) {
        std::vector<CliqueGraph> sources{CliqueGraph(n)};
        for (int trial = 0; trial < 3; ++trial) sources.push_back(triangle_free(n, rng));
        for (const auto& g : sources)
          for (Variant v : kSplit) {
            auto inst = generate(g, k, v);
            const std::string at = where(g, k, to_string(v));
            auto r = max_disjoint_shortest_paths(inst, {*native_mode(v), 8, kDefaultBudget});
            try {
              auto ex = extract_clique(inst, r.solution);
              c.check(ex.labels.empty() || ex.is_clique, "extracted set is a clique", at);
              c.check(static_cast<int>(ex.labels.size()) >= r.count - k, "clique >= m - k",
                      at + " m=" + std::to_string(r.count) + " clique " +
                          std::to_string(ex.labels.size()));
            } catch (const Error& e) {
              c.check(false, "extraction " + to_string(v),
                      at + " m=" + std::to_string(r.count) + ": " + e.what());
            }
          }
      }
    for (Variant v : kPlain)
      for (Mode m : {Mode::Edge, Mode::Vertex}) {
        auto inst = generate(CliqueGraph(2), 2, v);
        auto fast = max_disjoint_shortest_paths(inst, {m, 1, kDefaultBudget});
        auto slow = naive_max_disjoint(inst, m);
        c.check(fast.count == slow.count, "edgeless N=2 k=2 equals brute force",
                to_string(v) + " " + to_string(m));
      }
  });
  c.report(t);
  return c.passed();
}

// ---- 6 -------------------------------------------------------------------

bool oracle_agreement() {
  Criterion c(6, "oracle-agreement");
  double t = timed([&] {
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= std::min(n, 2); ++k)
        for (const auto& g : all_graphs(n))
          for (const Config& cfg : all_configs())
            for (Mode m : {Mode::Edge, Mode::Vertex}) {
              auto inst = generate(g, k, cfg.variant, cfg.flags);
              const std::string at = where(g, k, describe(cfg) + " " + to_string(m));
              auto fast = max_disjoint_shortest_paths(inst, {m, 4, kDefaultBudget});
              auto slow = naive_max_disjoint(inst, m);
              c.check(fast.count == slow.count, "count",
                      at + " solver " + std::to_string(fast.count) + " naive " +
                          std::to_string(slow.count));
              Verdict verdict = verify_solution(inst, fast.solution, m);
              c.check(verdict.accepted, "witness", at + ": " + verdict.reason);
            }
  });
  c.report(t);
  return c.passed();
}

// ---- 7 -------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::string& cmd) { return std::system((cmd + " 2>/dev/null").c_str()); }

bool determinism(const std::string& cli) {
  Criterion c(7, "determinism");
  double t = timed([&] {
    fs::path dir = fs::temp_directory_path() /
                   ("dspforge-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    std::mt19937 rng(7007);
    std::vector<int> clique;
    std::vector<std::pair<std::string, CliqueGraph>> sources = {
        {"k3", oracle::complete(3)}, {"planted", planted(4, 3, rng, clique)}};
    for (const auto& [name, g] : sources) {
      fs::path src = dir / (name + ".dimacs");
      std::ofstream(src) << to_dimacs(g);
      for (const Config& cfg : all_configs()) {
        const std::string tag = name + "-" + describe(cfg);
        std::string gen_args = " gen " + src.string() + " -k 3 --variant " + to_string(cfg.variant);
        if (cfg.flags.degree_reduced) gen_args += " --degree-reduce";
        if (cfg.flags.unit_cost) gen_args += " --unit-cost";
        std::string solve_mode = is_intermediate(cfg.variant) ? " --mode edge" : "";
        std::vector<std::string> insts, sols;
        for (int rep = 0; rep < 2; ++rep)
          for (int threads : {1, 8}) {
            std::string stem = tag + "-" + std::to_string(threads) + "-" + std::to_string(rep);
            fs::path inst = dir / (stem + ".json"), sol = dir / (stem + ".sol.json");
            std::string th = " --threads " + std::to_string(threads);
            int rc = run(cli + th + gen_args + " -o " + inst.string());
            c.check(rc == 0, "gen exit", tag);
            rc = run(cli + th + " solve " + inst.string() + solve_mode + " -o " + sol.string());
            c.check(rc == 0, "solve exit", tag);
            insts.push_back(slurp(inst));
            sols.push_back(slurp(sol));
          }
        for (std::size_t r = 1; r < insts.size(); ++r) {
          c.check(!insts[0].empty() && insts[r] == insts[0], "instance bytes", tag);
          c.check(!sols[0].empty() && sols[r] == sols[0], "solution bytes", tag);
        }
      }
    }
    fs::remove_all(dir);
  });
  c.report(t);
  return c.passed();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path to dspforge cli>\n", argv[0]);
    return 2;
  }
  bool ok = true;
  ok &= size_formulas();
  ok &= structure();
  ok &= canonical_equivalence();
  ok &= completeness();
  ok &= soundness();
  ok &= oracle_agreement();
  ok &= determinism(argv[1]);
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
