#ifndef RAMSEY_RAMSEY_H
#define RAMSEY_RAMSEY_H

/* C interface to the ramsey library. Every function returns a status code;
 * on failure ramsey_last_error() describes it (thread-local, valid until the
 * next call on the same thread). Strings returned through char ** are owned
 * by the caller and released with ramsey_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define RAMSEY_API __attribute__((visibility("default")))
#else
#define RAMSEY_API
#endif

typedef enum ramsey_status
{
    RAMSEY_OK = 0,
    RAMSEY_INVALID_ARGUMENT = 1,
    RAMSEY_PARSE = 2,
    RAMSEY_PRECONDITION = 3,
    /* Budget ran out. Operations that can report partial results still set
     * their output, with "exact": false. */
    RAMSEY_BUDGET = 4,
    RAMSEY_INTERNAL = 5
} ramsey_status;

typedef struct ramsey_coloring ramsey_coloring;

RAMSEY_API const char * ramsey_version(void);
RAMSEY_API const char * ramsey_last_error(void);
RAMSEY_API const char * ramsey_status_name(ramsey_status status);
RAMSEY_API void ramsey_string_free(char * s);

/* Colourings of K_n: every edge blue initially. */
RAMSEY_API ramsey_status ramsey_coloring_new(int n, ramsey_coloring ** out);
/* Red between a part of size a and a part of size b, blue inside. */
RAMSEY_API ramsey_status ramsey_coloring_chi(int a, int b, ramsey_coloring ** out);
/* Parse kcol text. On RAMSEY_PARSE, *error_offset (if non-null) is the byte offset. */
RAMSEY_API ramsey_status ramsey_coloring_decode(const char * text, long * error_offset, ramsey_coloring ** out);
RAMSEY_API ramsey_status ramsey_coloring_encode(const ramsey_coloring * c, char ** kcol);
RAMSEY_API ramsey_status ramsey_coloring_clone(const ramsey_coloring * c, ramsey_coloring ** out);
RAMSEY_API void ramsey_coloring_free(ramsey_coloring * c);
RAMSEY_API int ramsey_coloring_size(const ramsey_coloring * c);
RAMSEY_API ramsey_status ramsey_coloring_is_red(const ramsey_coloring * c, int i, int j, int * red);
RAMSEY_API ramsey_status ramsey_coloring_set(ramsey_coloring * c, int i, int j, int red);
/* {"n": .., "red_edges": [[i, j], ...]} */
RAMSEY_API ramsey_status ramsey_coloring_to_json(const ramsey_coloring * c, char ** json);
RAMSEY_API ramsey_status ramsey_coloring_from_json(const char * json, ramsey_coloring ** out);

/* Pattern names: P<k>, C<k>, S<k>, K<k>, or an explicit edge list. */
RAMSEY_API ramsey_status ramsey_count(const ramsey_coloring * c, const char * pattern, char ** json);

/* Search requests: {"pattern": .., "n" | "n_max": .., "budget": {"max_nodes",
 * "max_time_ms", "threads", "symmetry_level", "checkpoint"}}. */
RAMSEY_API ramsey_status ramsey_multiplicity(const char * request, char ** json);
RAMSEY_API ramsey_status ramsey_number(const char * request, char ** json);
RAMSEY_API ramsey_status ramsey_threshold(const char * request, char ** json);

/* {"mode": "exact" | "local", "seed": .., optional "A": [...], "within": "red" | "blue"} */
RAMSEY_API ramsey_status ramsey_extremal(const ramsey_coloring * c, const char * request, char ** json);
/* {"k": .., "A": [...], "lambda": ..}; B is the complement of A. */
RAMSEY_API ramsey_status ramsey_case2(const ramsey_coloring * c, const char * request, char ** json);
/* {"claim": "common-neighbor" | "bridged-cliques" | "alternating", "color",
 * "S", "T", "l", and "P1", "P2" or "w", "P" as the claim needs}. */
RAMSEY_API ramsey_status ramsey_verify_claim(const ramsey_coloring * c, const char * request, char ** json);
/* {"lemma": "countpath2-p1" | "countpath2-p2" | "countcycle1", "grid":
 * "default" | "small", "seed", optional "instances", "threads"} */
RAMSEY_API ramsey_status ramsey_verify_lemma(const char * request, char ** json);
/* {"parts": "auto-random:M=<m>" | [[...], ...], "eps", "seed", optional "d",
 * "mode": "paper" | "explorer", "samples", "extremal_mode"} */
RAMSEY_API ramsey_status ramsey_classify(const ramsey_coloring * c, const char * request, char ** json);

#ifdef __cplusplus
}
#endif

#endif
