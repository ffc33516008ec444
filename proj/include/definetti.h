/* definetti: exact finite probability, exchangeable urn processes, and cones
 * over the draw-and-delete chain, behind a C ABI.
 *
 * Conventions:
 *  - Every function returns a df_status.  DF_OK means success; DF_CHECK_FAILED
 *    means a verification ran to completion and found a counterexample (the
 *    JSON result still describes it); anything else is an error and
 *    df_last_error() holds a message for the calling thread.
 *  - Rational numbers cross this boundary as "num/den" strings (or plain
 *    integers); they are exact and parse back losslessly.
 *  - Strings returned through char** are heap-allocated; release them with
 *    df_string_free.
 */
#ifndef DEFINETTI_H
#define DEFINETTI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DEFINETTI_API __declspec(dllexport)
#else
#define DEFINETTI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum df_status {
  DF_OK = 0,
  DF_CHECK_FAILED = 1,
  DF_ERR_BAD_ARGUMENT = 2,
  DF_ERR_PARSE = 3,
  DF_ERR_DIVIDE_BY_ZERO = 4,
  DF_ERR_EMPTY_URN = 5,
  DF_ERR_BAD_PROBABILITY = 6,
  DF_ERR_OUT_OF_RANGE = 7,
  DF_ERR_BAD_PARAMS = 8,
  DF_ERR_HORIZON_EXCEEDED = 9,
  DF_ERR_NOT_A_CONE = 10,
  DF_ERR_NOT_COMPLETELY_MONOTONE = 11,
  DF_ERR_NOT_EXCHANGEABLE = 12,
  DF_ERR_INEXACT_CANDIDATE = 13,
  DF_ERR_INTERNAL = 14
} df_status;

/* Stable name of a status value, e.g. "bad_probability". */
DEFINETTI_API const char* df_status_name(df_status status);

/* Message from the most recent failing call on this thread; "" if none. */
DEFINETTI_API const char* df_last_error(void);

DEFINETTI_API void df_string_free(char* s);

/* A source describes where cone levels come from: either a bit-emitting
 * transition system (polya, alternating, bernoulli) unfolded from its start
 * state, or a candidate limit measure on [0,1] (point-mass, lebesgue, beta)
 * whose exact moments induce the levels. */
typedef struct df_source df_source;

DEFINETTI_API df_status df_source_polya(int64_t black, int64_t white, df_source** out);
DEFINETTI_API df_status df_source_alternating(int start_bit, df_source** out);
DEFINETTI_API df_status df_source_bernoulli(const char* bias, df_source** out);
DEFINETTI_API df_status df_source_point_mass(const char* r, df_source** out);
DEFINETTI_API df_status df_source_lebesgue(df_source** out);
DEFINETTI_API df_status df_source_beta(const char* alpha, const char* beta,
                                       df_source** out);
DEFINETTI_API int df_source_is_coalgebra(const df_source* source);
DEFINETTI_API df_status df_source_describe_json(const df_source* source, char** out);
DEFINETTI_API void df_source_free(df_source* source);

/* Cone prefix: distributions over size-K binary multisets for K=0..horizon. */
typedef struct df_cone df_cone;

DEFINETTI_API df_status df_cone_build(const df_source* source, int32_t horizon,
                                      df_cone** out);
DEFINETTI_API int32_t df_cone_horizon(const df_cone* cone);
DEFINETTI_API df_status df_cone_level_json(const df_cone* cone, int32_t level,
                                           char** out);
DEFINETTI_API void df_cone_free(df_cone* cone);

/* Checks the draw-and-delete cone condition between consecutive levels.
 * DF_OK with {"verdict":"ok"} or DF_CHECK_FAILED with an exact witness. */
DEFINETTI_API df_status df_cone_verify_json(const df_cone* cone, char** out);

/* Full limit analysis of a verified cone against a candidate measure: exact
 * moment sequence, complete-monotonicity verdict, reconstruction round trip,
 * and the match verdict.  DF_CHECK_FAILED when any check finds a witness. */
DEFINETTI_API df_status df_definetti_report_json(const df_cone* cone,
                                                 const df_source* candidate,
                                                 char** out);

/* Approximant grid tables at the given levels (each >= 1, <= horizon). */
DEFINETTI_API df_status df_table_csv(const df_cone* cone, const int32_t* levels,
                                     size_t levels_len, char** out);
DEFINETTI_API df_status df_table_json(const df_cone* cone, const int32_t* levels,
                                      size_t levels_len, char** out);

/* Two-step swap-invariance check of a transition-system source at its start
 * state.  DF_OK when exchangeable, DF_CHECK_FAILED with a witness outcome
 * whose probability changes under swapping. */
DEFINETTI_API df_status df_exchangeable_json(const df_source* source, char** out);

/* Exact Beta/coin conjugacy check for the urn (black, white), comparing both
 * square paths on all outcomes and moment orders 0..max_order.  Setting
 * inject_posterior_shift to nonzero deliberately corrupts the posterior
 * update to exercise the detector.  DF_CHECK_FAILED on mismatch. */
DEFINETTI_API df_status df_conjugacy_json(int64_t black, int64_t white,
                                          int32_t max_order,
                                          int inject_posterior_shift, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DEFINETTI_H */
