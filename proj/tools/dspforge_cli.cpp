// dspforge command line: gen / verify / solve / extract-clique / export.
// Exit codes: 0 pass, 1 fail or reject, 2 usage or parameter error, 3 budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dspforge/dspforge.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(dsp_status s) {
  switch (s) {
    case DSP_OK: return kExitPass;
    case DSP_ERR_BUDGET: return kExitBudget;
    case DSP_ERR_DECODE:
    case DSP_ERR_INTERNAL: return kExitFail;
    default: return kExitUsage;
  }
}

void check(dsp_status s) {
  if (s != DSP_OK)
    throw CliError{exit_code_for(s), std::string(dsp_status_name(s)) + ": " + dsp_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { dsp_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(dsp_instance* p) const { dsp_instance_free(p); }
};
struct SolutionDeleter {
  void operator()(dsp_solution* p) const { dsp_solution_free(p); }
};
using Instance = std::unique_ptr<dsp_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<dsp_solution, SolutionDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError{kExitUsage, "cannot write " + path};
}

Instance load_instance(const std::string& path) {
  dsp_instance* raw = nullptr;
  check(dsp_instance_from_json(read_file(path).c_str(), &raw));
  return Instance(raw);
}

uint64_t budget_from_env() {
  const char* env = std::getenv("DSP_FORGE_BUDGET");
  if (!env || !*env) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw CliError{kExitUsage, "DSP_FORGE_BUDGET must be a positive integer"};
  return v;
}

struct GenArgs {
  std::string source, out, variant;
  int k = 0;
  bool degree_reduce = false, unit_cost = false;
};

int run_gen(const GenArgs& a) {
  dsp_clique* g = nullptr;
  check(dsp_clique_parse_dimacs(read_file(a.source).c_str(), &g));
  std::unique_ptr<dsp_clique, void (*)(dsp_clique*)> graph(g, dsp_clique_free);
  unsigned flags = 0;
  if (a.degree_reduce) flags |= DSP_FLAG_DEGREE_REDUCE;
  if (a.unit_cost) flags |= DSP_FLAG_UNIT_COST;
  dsp_instance* raw = nullptr;
  check(dsp_instance_generate(graph.get(), a.k, a.variant.c_str(), flags, &raw));
  Instance inst(raw);
  char* text = nullptr;
  check(dsp_instance_to_json(inst.get(), &text));
  OwnedString json(text);
  write_output(a.out, json.get());
  char* fp = nullptr;
  check(dsp_instance_fingerprint(inst.get(), &fp));
  OwnedString fingerprint(fp);
  std::cerr << dsp_instance_variant(inst.get()) << ": " << dsp_instance_vertex_count(inst.get())
            << " vertices, " << dsp_instance_edge_count(inst.get()) << " edges, fingerprint "
            << fingerprint.get() << "\n";
  return kExitPass;
}

int run_verify(const std::string& path, const std::string& out) {
  Instance inst = load_instance(path);
  char* text = nullptr;
  int all_pass = 0;
  check(dsp_verify(inst.get(), &text, &all_pass));
  OwnedString report(text);
  if (!out.empty()) write_output(out, std::string(report.get()) + "\n");
  auto j = nlohmann::json::parse(report.get());
  std::cout << "instance " << j["variant"].get<std::string>() << " N=" << j["N"] << " k=" << j["k"]
            << " fingerprint " << j["fingerprint"].get<std::string>() << "\n";
  for (const auto& c : j["checks"]) {
    std::printf("  %-5s %-22s %s\n", c["status"].get<std::string>().c_str(),
                c["name"].get<std::string>().c_str(), c["detail"].get<std::string>().c_str());
  }
  std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? kExitPass : kExitFail;
}

struct SolveArgs {
  std::string instance, out, mode;
  bool allow_mismatch = false;
  uint64_t budget = 0;
  int threads = 1;
};

int run_solve(const SolveArgs& a) {
  Instance inst = load_instance(a.instance);
  const char* native = dsp_instance_native_mode(inst.get());
  std::string mode = a.mode;
  if (mode.empty()) {
    if (!native)
      throw CliError{kExitUsage, std::string(dsp_instance_variant(inst.get())) +
                                     " has no native mode; pass --mode edge|vertex"};
    mode = native;
  } else if (native && mode != native && !a.allow_mismatch) {
    throw CliError{kExitUsage, std::string(dsp_instance_variant(inst.get())) + " is built for " +
                                   native + "-disjoint paths; pass --allow-mode-mismatch to solve in " +
                                   mode + " mode"};
  }
  uint64_t budget = a.budget ? a.budget : budget_from_env();
  dsp_solution* raw = nullptr;
  dsp_status s = dsp_solve(inst.get(), mode.c_str(), a.threads, budget, &raw);
  if (s == DSP_ERR_BUDGET)
    throw CliError{kExitBudget, std::string(dsp_last_error()) + "; instance has " +
                                    std::to_string(dsp_instance_vertex_count(inst.get())) +
                                    " vertices and " +
                                    std::to_string(dsp_instance_edge_count(inst.get())) + " edges"};
  check(s);
  SolutionPtr sol(raw);
  char* text = nullptr;
  check(dsp_solution_to_json(inst.get(), sol.get(), &text));
  OwnedString json(text);
  write_output(a.out, json.get());
  std::cerr << "count " << dsp_solution_count(sol.get()) << " (" << mode << "-disjoint, "
            << dsp_solution_nodes(sol.get()) << " nodes)\n";
  return kExitPass;
}

int run_extract(const std::string& instance_path, const std::string& solution_path) {
  Instance inst = load_instance(instance_path);
  dsp_solution* raw = nullptr;
  check(dsp_solution_from_json(inst.get(), read_file(solution_path).c_str(), &raw));
  SolutionPtr sol(raw);
  int accepted = 0;
  char* why = nullptr;
  check(dsp_verify_solution(inst.get(), sol.get(), nullptr, &accepted, &why));
  OwnedString reason(why);
  if (!accepted) {
    std::cout << "solution rejected: " << reason.get() << "\n";
    return kExitFail;
  }
  char* text = nullptr;
  dsp_status s = dsp_extract_clique(inst.get(), sol.get(), &text);
  if (s == DSP_ERR_DECODE) {
    std::cout << "decode failure: " << dsp_last_error() << "\n";
    return kExitFail;
  }
  check(s);
  OwnedString json(text);
  auto j = nlohmann::json::parse(json.get());
  std::cout << "good indices " << j["good"].dump() << "\n"
            << "deltas       " << j["deltas"].dump() << "\n"
            << "clique       " << j["labels"].dump() << "\n"
            << "is_clique    " << (j["is_clique"].get<bool>() ? "true" : "false") << "\n";
  return j["is_clique"].get<bool>() ? kExitPass : kExitFail;
}

int run_export(const std::string& path, const std::string& format, const std::string& out) {
  Instance inst = load_instance(path);
  char* text = nullptr;
  check(dsp_instance_export(inst.get(), format.c_str(), &text));
  OwnedString body(text);
  write_output(out, body.get());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and check disjoint-shortest-paths instances built from k-Clique"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "Solver worker threads")->check(CLI::Range(1, 1024));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance from a DIMACS source graph");
  gen_cmd->add_option("source", gen.source, "DIMACS file")->required();
  gen_cmd->add_option("-k", gen.k, "Clique size")->required();
  gen_cmd->add_option("--variant", gen.variant, "d-int|d-edge|d-vertex|u-int|u-edge|u-vertex")
      ->required();
  gen_cmd->add_flag("--degree-reduce", gen.degree_reduce, "Binary-tree terminal fans (directed)");
  gen_cmd->add_flag("--unit-cost", gen.unit_cost, "Subdivided unit-cost fans (undirected)");
  gen_cmd->add_option("-o,--output", gen.out, "Instance JSON path (default stdout)");

  std::string verify_path, verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Run the structural checks on an instance");
  verify_cmd->add_option("instance", verify_path)->required();
  verify_cmd->add_option("-o,--output", verify_out, "Also write the JSON report here");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Maximum disjoint shortest paths");
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--mode", solve.mode, "edge|vertex (default: the variant's own)")
      ->check(CLI::IsMember({"edge", "vertex"}));
  solve_cmd->add_flag("--allow-mode-mismatch", solve.allow_mismatch);
  solve_cmd->add_option("--budget", solve.budget, "Search node budget (env DSP_FORGE_BUDGET)");
  solve_cmd->add_option("-o,--output", solve.out, "Solution JSON path (default stdout)");

  std::string ex_instance, ex_solution;
  auto* extract_cmd = app.add_subcommand("extract-clique", "Decode a clique from a solution");
  extract_cmd->add_option("instance", ex_instance)->required();
  extract_cmd->add_option("solution", ex_solution)->required();

  std::string export_path, export_format, export_out;
  auto* export_cmd = app.add_subcommand("export", "Export an instance as dot, graphml or json");
  export_cmd->add_option("instance", export_path)->required();
  export_cmd->add_option("--format", export_format)->required();
  export_cmd->add_option("-o,--output", export_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify_path, verify_out);
    if (*solve_cmd) {
      solve.threads = threads;
      return run_solve(solve);
    }
    if (*extract_cmd) return run_extract(ex_instance, ex_solution);
    if (*export_cmd) return run_export(export_path, export_format, export_out);
  } catch (const CliError& e) {
    std::cerr << "dspforge: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitUsage;
}
