/* C interface to the dspforge instance generator and solver. */
#ifndef DSPFORGE_DSPFORGE_H
#define DSPFORGE_DSPFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DSP_API __declspec(dllexport)
#else
#define DSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dsp_clique dsp_clique;
typedef struct dsp_instance dsp_instance;
typedef struct dsp_solution dsp_solution;

typedef enum dsp_status {
  DSP_OK = 0,
  DSP_ERR_PARSE,
  DSP_ERR_RANGE,
  DSP_ERR_PARAMETER,
  DSP_ERR_VARIANT,
  DSP_ERR_DOUBLE_APPLICATION,
  DSP_ERR_CYCLE,
  DSP_ERR_MISSING_POSITION,
  DSP_ERR_DISCONNECTED,
  DSP_ERR_BUDGET,
  DSP_ERR_DECODE,
  DSP_ERR_NOT_CLIQUE,
  DSP_ERR_SCHEMA,
  DSP_ERR_IO,
  DSP_ERR_INTERNAL,
  DSP_ERR_NULL_ARGUMENT
} dsp_status;

enum {
  DSP_FLAG_DEGREE_REDUCE = 1u << 0,
  DSP_FLAG_UNIT_COST = 1u << 1
};

/* Message for the last failed call on this thread; never NULL. */
DSP_API const char* dsp_last_error(void);
DSP_API const char* dsp_status_name(dsp_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
DSP_API void dsp_string_free(char* s);

/* ---- source graphs ---- */
DSP_API dsp_status dsp_clique_parse_dimacs(const char* text, dsp_clique** out);
DSP_API int dsp_clique_vertex_count(const dsp_clique* g);
DSP_API void dsp_clique_free(dsp_clique* g);

/* ---- instances ---- */
/* variant: d-int, d-edge, d-vertex, u-int, u-edge, u-vertex. */
DSP_API dsp_status dsp_instance_generate(const dsp_clique* g, int k, const char* variant,
                                         unsigned flags, dsp_instance** out);
DSP_API dsp_status dsp_instance_from_json(const char* text, dsp_instance** out);
DSP_API dsp_status dsp_instance_to_json(const dsp_instance* inst, char** out);
/* format: dot, graphml, json. */
DSP_API dsp_status dsp_instance_export(const dsp_instance* inst, const char* format, char** out);
DSP_API dsp_status dsp_instance_fingerprint(const dsp_instance* inst, char** out);
DSP_API size_t dsp_instance_vertex_count(const dsp_instance* inst);
DSP_API size_t dsp_instance_edge_count(const dsp_instance* inst);
/* Static strings; native mode is NULL for the intermediate variants. */
DSP_API const char* dsp_instance_variant(const dsp_instance* inst);
DSP_API const char* dsp_instance_native_mode(const dsp_instance* inst);
DSP_API void dsp_instance_free(dsp_instance* inst);

/* Structural battery; the report is JSON. */
DSP_API dsp_status dsp_verify(const dsp_instance* inst, char** report_json, int* all_pass);

/* ---- solving ---- */
/* mode: edge or vertex. budget 0 selects the default of 10^7 nodes. */
DSP_API dsp_status dsp_solve(const dsp_instance* inst, const char* mode, int threads,
                             uint64_t budget, dsp_solution** out);
DSP_API dsp_status dsp_completeness_witness(const dsp_instance* inst, const int* labels,
                                            size_t count, dsp_solution** out);
DSP_API dsp_status dsp_solution_from_json(const dsp_instance* inst, const char* text,
                                          dsp_solution** out);
DSP_API dsp_status dsp_solution_to_json(const dsp_instance* inst, const dsp_solution* sol,
                                        char** out);
DSP_API int dsp_solution_count(const dsp_solution* sol);
DSP_API uint64_t dsp_solution_nodes(const dsp_solution* sol);
DSP_API const char* dsp_solution_mode(const dsp_solution* sol);
DSP_API void dsp_solution_free(dsp_solution* sol);

/* mode NULL uses the solution's own mode. reason may be NULL. */
DSP_API dsp_status dsp_verify_solution(const dsp_instance* inst, const dsp_solution* sol,
                                       const char* mode, int* accepted, char** reason);
/* JSON {good, deltas, labels, is_clique}. */
DSP_API dsp_status dsp_extract_clique(const dsp_instance* inst, const dsp_solution* sol,
                                      char** result_json);

#ifdef __cplusplus
}
#endif

#endif
