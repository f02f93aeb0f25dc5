#ifndef ROOMASSIGN_H
#define ROOMASSIGN_H

/* C interface to the roomassign solver library.
 *
 * Objects are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Strings handed out by the library
 * are released with ra_string_free. Every call returns an ra_status;
 * details of the most recent failure on the calling thread are available
 * through ra_last_error and friends.
 *
 * Player ids in arrays are 0-based; the text formats use 1-based ids. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ROOMASSIGN_BUILDING)
#    define RA_API __declspec(dllexport)
#  else
#    define RA_API __declspec(dllimport)
#  endif
#else
#  define RA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ra_status {
    RA_OK = 0,
    RA_INVALID_ARGUMENT = 1,
    RA_PARSE = 2,
    RA_PRECONDITION = 3,
    RA_BUDGET = 4,
    RA_INTERNAL = 5
} ra_status;

typedef struct ra_instance ra_instance;
typedef struct ra_assignment ra_assignment;

/* Zero means unlimited for both fields. */
typedef struct ra_budget {
    uint64_t node_limit;
    double time_limit_seconds;
} ra_budget;

typedef enum ra_mode { RA_MODE_BEST = 0, RA_MODE_WORST = 1 } ra_mode;
typedef enum ra_verify_method { RA_VERIFY_PRUNED = 0, RA_VERIFY_BRUTE = 1 } ra_verify_method;

typedef struct ra_generator_params {
    int n;
    const int* capacities;
    size_t capacity_count;
    ra_mode mode;
    int strict;
    int complete;
    double acceptability;
    double ties;
    uint64_t seed;
} ra_generator_params;

/* Message of the last failed call on this thread ("" if none). */
RA_API const char* ra_last_error(void);
/* 1-based position of the last parse error, 0 when not applicable. */
RA_API size_t ra_last_error_line(void);
RA_API size_t ra_last_error_column(void);

RA_API void ra_string_free(char* s);

RA_API ra_status ra_instance_parse(const char* text, ra_instance** out);
RA_API ra_status ra_instance_write(const ra_instance* inst, char** out);
RA_API ra_status ra_instance_generate(const ra_generator_params* params, ra_instance** out);
RA_API int ra_instance_player_count(const ra_instance* inst);
RA_API void ra_instance_free(ra_instance* inst);

RA_API ra_status ra_assignment_parse(const char* text, const ra_instance* inst, ra_assignment** out);
RA_API ra_status ra_assignment_write(const ra_instance* inst, const ra_assignment* a, char** out);
RA_API void ra_assignment_free(ra_assignment* a);

/* *pareto_optimal is set to 1 or 0; when 0 and witness is non-null, a
 * dominating assignment is returned there. */
RA_API ra_status ra_verify(const ra_instance* inst, const ra_assignment* a, ra_verify_method method,
                           const ra_budget* budget, int* pareto_optimal, ra_assignment** witness);

/* Serial dictatorship; the variant follows the instance mode. order may be
 * null for ascending ids. trace (optional) receives one line per round. */
RA_API ra_status ra_find_sd(const ra_instance* inst, const int* order, size_t order_len,
                            ra_assignment** out, char** trace);

/* The searches below set *found to 1 or 0; *out is only written when found. */
RA_API ra_status ra_find_brute(const ra_instance* inst, const ra_budget* budget, int* found,
                               ra_assignment** out);
RA_API ra_status ra_find_feasible(const ra_instance* inst, const ra_budget* budget, int* found,
                                  ra_assignment** out);
RA_API ra_status ra_find_unanimous(const ra_instance* inst, const ra_budget* budget, int* found,
                                   ra_assignment** out);

/* Follows Pareto improvements from start. potentials (optional) receives
 * the rank potentials along the chain as text, one per line. */
RA_API ra_status ra_improve(const ra_instance* inst, const ra_assignment* start, const ra_budget* budget,
                            ra_assignment** out, size_t* length, char** potentials);

/* All feasible (or, with poa_only, all Pareto optimal) assignments as
 * assignment text blocks separated by blank lines. */
RA_API ra_status ra_enumerate(const ra_instance* inst, int poa_only, const ra_budget* budget,
                              size_t* count, char** out);

/* construction: verw, verb, feas, binpack, tiesbest, tiesworst, dtc3dm.
 * out receives instance text (digraph text for dtc3dm); distinguished, if
 * non-null, receives the distinguished assignment text or null. */
RA_API ra_status ra_reduce(const char* construction, const char* input, char** out, char** distinguished);

/* problem: tc, dtc, 3dm, bin. certificate (optional) receives the
 * certificate text when *found is 1. */
RA_API ra_status ra_oracle(const char* problem, const char* input, const ra_budget* budget, int* found,
                           char** certificate);

#ifdef __cplusplus
}
#endif

#endif
