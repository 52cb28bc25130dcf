#include "dspforge/dspforge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "dspforge/error.hpp"
#include "dspforge/io.hpp"
#include "dspforge/reduction.hpp"
#include "dspforge/solver.hpp"
#include "dspforge/verify.hpp"

struct dsp_clique {
  dspforge::CliqueGraph g;
};

struct dsp_instance {
  dspforge::DspInstance inst;
};

struct dsp_solution {
  dspforge::Solution sol;
  std::uint64_t nodes = 0;
};

namespace {

thread_local std::string last_error;

dsp_status map_code(dspforge::ErrorCode c) {
  using dspforge::ErrorCode;
  switch (c) {
    case ErrorCode::Parse: return DSP_ERR_PARSE;
    case ErrorCode::OutOfRange: return DSP_ERR_RANGE;
    case ErrorCode::Parameter: return DSP_ERR_PARAMETER;
    case ErrorCode::Variant: return DSP_ERR_VARIANT;
    case ErrorCode::DoubleApplication: return DSP_ERR_DOUBLE_APPLICATION;
    case ErrorCode::Cycle: return DSP_ERR_CYCLE;
    case ErrorCode::MissingPosition: return DSP_ERR_MISSING_POSITION;
    case ErrorCode::Disconnected: return DSP_ERR_DISCONNECTED;
    case ErrorCode::Budget: return DSP_ERR_BUDGET;
    case ErrorCode::Decode: return DSP_ERR_DECODE;
    case ErrorCode::NotClique: return DSP_ERR_NOT_CLIQUE;
    case ErrorCode::Schema: return DSP_ERR_SCHEMA;
    case ErrorCode::Io: return DSP_ERR_IO;
    case ErrorCode::Internal: return DSP_ERR_INTERNAL;
  }
  return DSP_ERR_INTERNAL;
}

template <class F>
dsp_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return DSP_OK;
  } catch (const dspforge::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DSP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DSP_ERR_INTERNAL;
  }
}

dsp_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return DSP_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* dsp_last_error(void) { return last_error.c_str(); }

const char* dsp_status_name(dsp_status status) {
  switch (status) {
    case DSP_OK: return "ok";
    case DSP_ERR_PARSE: return "parse error";
    case DSP_ERR_RANGE: return "out of range";
    case DSP_ERR_PARAMETER: return "parameter error";
    case DSP_ERR_VARIANT: return "variant mismatch";
    case DSP_ERR_DOUBLE_APPLICATION: return "double application";
    case DSP_ERR_CYCLE: return "cycle";
    case DSP_ERR_MISSING_POSITION: return "missing position";
    case DSP_ERR_DISCONNECTED: return "disconnected pair";
    case DSP_ERR_BUDGET: return "budget exceeded";
    case DSP_ERR_DECODE: return "decode failure";
    case DSP_ERR_NOT_CLIQUE: return "not a clique";
    case DSP_ERR_SCHEMA: return "schema error";
    case DSP_ERR_IO: return "io error";
    case DSP_ERR_INTERNAL: return "internal error";
    case DSP_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

void dsp_string_free(char* s) { std::free(s); }

dsp_status dsp_clique_parse_dimacs(const char* text, dsp_clique** out) {
  if (!text || !out) return null_arg("text/out");
  return guarded([&] { *out = new dsp_clique{dspforge::parse_dimacs(text)}; });
}

int dsp_clique_vertex_count(const dsp_clique* g) { return g ? g->g.n() : 0; }

void dsp_clique_free(dsp_clique* g) { delete g; }

dsp_status dsp_instance_generate(const dsp_clique* g, int k, const char* variant, unsigned flags,
                                 dsp_instance** out) {
  if (!g || !variant || !out) return null_arg("g/variant/out");
  return guarded([&] {
    dspforge::GadgetFlags f;
    f.degree_reduced = (flags & DSP_FLAG_DEGREE_REDUCE) != 0;
    f.unit_cost = (flags & DSP_FLAG_UNIT_COST) != 0;
    *out = new dsp_instance{dspforge::generate(g->g, k, dspforge::parse_variant(variant), f)};
  });
}

dsp_status dsp_instance_from_json(const char* text, dsp_instance** out) {
  if (!text || !out) return null_arg("text/out");
  return guarded([&] { *out = new dsp_instance{dspforge::instance_from_json(text)}; });
}

dsp_status dsp_instance_to_json(const dsp_instance* inst, char** out) {
  if (!inst || !out) return null_arg("inst/out");
  return guarded([&] { *out = dup_string(dspforge::instance_to_json(inst->inst) + "\n"); });
}

dsp_status dsp_instance_export(const dsp_instance* inst, const char* format, char** out) {
  if (!inst || !format || !out) return null_arg("inst/format/out");
  return guarded([&] {
    *out = dup_string(
        dspforge::export_instance(inst->inst, dspforge::parse_export_format(format)));
  });
}

dsp_status dsp_instance_fingerprint(const dsp_instance* inst, char** out) {
  if (!inst || !out) return null_arg("inst/out");
  return guarded([&] { *out = dup_string(dspforge::fingerprint(inst->inst)); });
}

size_t dsp_instance_vertex_count(const dsp_instance* inst) {
  return inst ? inst->inst.graph.vertex_count() : 0;
}

size_t dsp_instance_edge_count(const dsp_instance* inst) {
  return inst ? inst->inst.graph.edge_count() : 0;
}

const char* dsp_instance_variant(const dsp_instance* inst) {
  if (!inst) return nullptr;
  static const char* names[] = {"d-int", "d-edge", "d-vertex", "u-int", "u-edge", "u-vertex"};
  return names[static_cast<int>(inst->inst.variant)];
}

const char* dsp_instance_native_mode(const dsp_instance* inst) {
  if (!inst) return nullptr;
  auto m = dspforge::native_mode(inst->inst.variant);
  if (!m) return nullptr;
  return *m == dspforge::Mode::Edge ? "edge" : "vertex";
}

void dsp_instance_free(dsp_instance* inst) { delete inst; }

dsp_status dsp_verify(const dsp_instance* inst, char** report_json, int* all_pass) {
  if (!inst || !report_json) return null_arg("inst/report_json");
  return guarded([&] {
    auto report = dspforge::verify_instance(inst->inst);
    *report_json = dup_string(dspforge::report_to_json(report));
    if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
  });
}

dsp_status dsp_solve(const dsp_instance* inst, const char* mode, int threads, uint64_t budget,
                     dsp_solution** out) {
  if (!inst || !mode || !out) return null_arg("inst/mode/out");
  return guarded([&] {
    dspforge::SolveOptions opts;
    opts.mode = dspforge::parse_mode(mode);
    opts.threads = threads < 1 ? 1 : threads;
    opts.budget = budget == 0 ? dspforge::kDefaultBudget : budget;
    auto res = dspforge::max_disjoint_shortest_paths(inst->inst, opts);
    *out = new dsp_solution{std::move(res.solution), res.nodes};
  });
}

dsp_status dsp_completeness_witness(const dsp_instance* inst, const int* labels, size_t count,
                                    dsp_solution** out) {
  if (!inst || (!labels && count) || !out) return null_arg("inst/labels/out");
  return guarded([&] {
    std::vector<int> l(labels, labels + count);
    *out = new dsp_solution{dspforge::completeness_witness(inst->inst, l), 0};
  });
}

dsp_status dsp_solution_from_json(const dsp_instance* inst, const char* text,
                                  dsp_solution** out) {
  if (!inst || !text || !out) return null_arg("inst/text/out");
  return guarded([&] {
    *out = new dsp_solution{dspforge::solution_from_json(inst->inst, text), 0};
  });
}

dsp_status dsp_solution_to_json(const dsp_instance* inst, const dsp_solution* sol, char** out) {
  if (!inst || !sol || !out) return null_arg("inst/sol/out");
  return guarded([&] { *out = dup_string(dspforge::solution_to_json(inst->inst, sol->sol) + "\n"); });
}

int dsp_solution_count(const dsp_solution* sol) {
  return sol ? static_cast<int>(sol->sol.paths.size()) : 0;
}

uint64_t dsp_solution_nodes(const dsp_solution* sol) { return sol ? sol->nodes : 0; }

const char* dsp_solution_mode(const dsp_solution* sol) {
  if (!sol) return nullptr;
  return sol->sol.mode == dspforge::Mode::Edge ? "edge" : "vertex";
}

void dsp_solution_free(dsp_solution* sol) { delete sol; }

dsp_status dsp_verify_solution(const dsp_instance* inst, const dsp_solution* sol,
                               const char* mode, int* accepted, char** reason) {
  if (!inst || !sol || !accepted) return null_arg("inst/sol/accepted");
  return guarded([&] {
    auto m = mode ? dspforge::parse_mode(mode) : sol->sol.mode;
    auto v = dspforge::verify_solution(inst->inst, sol->sol, m);
    *accepted = v.accepted ? 1 : 0;
    if (reason) *reason = dup_string(v.reason);
  });
}

dsp_status dsp_extract_clique(const dsp_instance* inst, const dsp_solution* sol,
                              char** result_json) {
  if (!inst || !sol || !result_json) return null_arg("inst/sol/result_json");
  return guarded([&] {
    auto ex = dspforge::extract_clique(inst->inst, sol->sol);
    nlohmann::json j = {{"good", ex.good},
                        {"deltas", ex.deltas},
                        {"labels", ex.labels},
                        {"is_clique", ex.is_clique}};
    *result_json = dup_string(j.dump());
  });
}

}  // extern "C"
