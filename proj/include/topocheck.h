/*
 * topocheck — exhaustive verification of finite topological spaces.
 *
 * C interface to the core library: opaque handles, integer status codes,
 * and JSON documents for structured results. Strings returned through
 * `char**` out-parameters are heap-allocated and must be released with
 * topo_string_free(). Detail for the most recent failure on the calling
 * thread is available via topo_last_error().
 *
 * Subsets of an n-point space are passed as bit masks (point i <-> bit i,
 * low n bits only). Space handles memoize derived tables internally and are
 * not synchronized: share a handle across threads only for concurrent reads
 * after warming it up, or give each thread its own handle.
 */
#ifndef TOPOCHECK_H
#define TOPOCHECK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TOPO_API __declspec(dllexport)
#else
#define TOPO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct topo_space_s topo_space;
typedef struct topo_stream_s topo_stream;

typedef enum topo_status_e {
  TOPO_OK = 0,
  TOPO_END = 1, /* stream exhausted */
  TOPO_ERR_INVALID_ARGUMENT = -1,
  TOPO_ERR_MISSING_EMPTY_SET = -2,
  TOPO_ERR_MISSING_FULL_SET = -3,
  TOPO_ERR_NOT_CLOSED_UNDER_UNION = -4,
  TOPO_ERR_NOT_CLOSED_UNDER_INTERSECTION = -5,
  TOPO_ERR_PARSE = -6,
  TOPO_ERR_RANGE = -7,
  TOPO_ERR_UNKNOWN_NAME = -8,
  TOPO_ERR_INTERNAL = -9,
} topo_status;

TOPO_API const char* topo_status_name(topo_status status);

/* Message describing the most recent failure on this thread (empty string
 * when none). Valid until the next failing call on the same thread. */
TOPO_API const char* topo_last_error(void);

/* --- names ---------------------------------------------------------------
 * Set classes and axioms are addressed by dense integer ids resolved from
 * their canonical kebab-case names ("sc-star-closed", "meekly-sc-star-normal",
 * ...). Ids are stable within a library version; enumerate names by index.
 */
TOPO_API int32_t topo_class_count(void);
TOPO_API const char* topo_class_name(int32_t class_id); /* NULL if out of range */
TOPO_API topo_status topo_class_from_name(const char* name, int32_t* out_id);

TOPO_API int32_t topo_axiom_count(void);
TOPO_API const char* topo_axiom_name(int32_t axiom_id);
TOPO_API topo_status topo_axiom_from_name(const char* name, int32_t* out_id);

/* Options for the meekly variant; zero-initialize for the literal reading. */
typedef struct topo_meekly_options_s {
  int32_t closure_disjoint; /* 0: U /\ V empty; 1: cl(U) /\ cl(V) empty */
  int32_t relaxed_operands; /* 0: both operands closed; 1: SC*-side need not be closed */
} topo_meekly_options;

/* --- spaces --------------------------------------------------------------- */

/* Validates the open-set family (must contain the empty and the full mask
 * and be closed under union and intersection; duplicates are dropped).
 * 1 <= point_count <= 16. */
TOPO_API topo_status topo_space_create(uint32_t point_count, const uint32_t* opens,
                                       size_t open_count, topo_space** out_space);

/* Parses {"points": ["k","l","m"], "opens": [[], ["k"], ...]}. */
TOPO_API topo_status topo_space_parse_json(const char* json_utf8, size_t length,
                                           topo_space** out_space);

TOPO_API void topo_space_free(topo_space* space);

TOPO_API uint32_t topo_space_points(const topo_space* space);
TOPO_API size_t topo_space_open_count(const topo_space* space);
TOPO_API uint32_t topo_space_open_at(const topo_space* space, size_t index);
TOPO_API topo_status topo_space_render_json(const topo_space* space, char** out_json);

/* --- closure calculus ----------------------------------------------------- */

TOPO_API uint32_t topo_closure(topo_space* space, uint32_t mask);
TOPO_API uint32_t topo_interior(topo_space* space, uint32_t mask);

/* theta-closure under the standard reading (closures of open
 * neighborhoods) and under the closed-set-neighborhood reading; the two
 * agree on every space. */
TOPO_API uint32_t topo_theta_closure(topo_space* space, uint32_t mask);
TOPO_API uint32_t topo_theta_closure_alt(topo_space* space, uint32_t mask);

/* --- set classes ----------------------------------------------------------- */

TOPO_API topo_status topo_class_member(topo_space* space, uint32_t mask,
                                       int32_t class_id, int32_t* out_member);

/* Intersection of class members containing the mask (closed-variant
 * classes) / union of class members inside it (open-variant classes). */
TOPO_API topo_status topo_class_closure(topo_space* space, uint32_t mask,
                                        int32_t class_id, uint32_t* out_mask);
TOPO_API topo_status topo_class_interior(topo_space* space, uint32_t mask,
                                         int32_t class_id, uint32_t* out_mask);

/* Writes the family's masks in ascending order. Sets *out_count to the
 * family size; fills at most capacity entries (call with capacity 0 to size
 * a buffer). */
TOPO_API topo_status topo_class_family(topo_space* space, int32_t class_id,
                                       uint32_t* out_masks, size_t capacity,
                                       size_t* out_count);

/* Full powerset-by-classes boolean table as JSON. */
TOPO_API topo_status topo_classification_json(topo_space* space,
                                              const int32_t* class_ids, size_t count,
                                              char** out_json);

/* --- axioms ---------------------------------------------------------------- */

TOPO_API topo_status topo_axiom_holds(topo_space* space, int32_t axiom_id,
                                      const topo_meekly_options* options,
                                      int32_t* out_holds);

/* Verdict with witnesses / refuting pair as JSON. */
TOPO_API topo_status topo_axiom_verdict_json(topo_space* space, int32_t axiom_id,
                                             const topo_meekly_options* options,
                                             char** out_json);

/* Verdicts for every axiom. */
TOPO_API topo_status topo_axiom_report_json(topo_space* space,
                                            const topo_meekly_options* options,
                                            char** out_json);

/* --- enumeration ------------------------------------------------------------
 * Streams every labeled topology on n points exactly once (1 <= n <= 7), or
 * one canonical representative per homeomorphism class. Sharding partitions
 * the generation tree by prefix: pass shard_count > 1 and a shard_index
 * below it; the shards are disjoint and jointly exhaustive.
 */
TOPO_API topo_status topo_stream_create(uint32_t point_count,
                                        int32_t up_to_homeomorphism,
                                        uint32_t shard_index, uint32_t shard_count,
                                        topo_stream** out_stream);
TOPO_API topo_status topo_stream_next(topo_stream* stream, topo_space** out_space);
TOPO_API void topo_stream_free(topo_stream* stream);

/* --- implication checking and audits ----------------------------------------
 * The job document:
 *   {"hypotheses": ["sc-star-normal"], "conclusion": "meekly-sc-star-normal",
 *    "n_min": 1, "n_max": 4, "up_to_homeomorphism": false, "jobs": 1,
 *    "meekly": {"disjointness": "open", "operands": "both-closed"}}
 * The report records the query, the number of spaces checked, and either
 * "verified-exhaustively" or the minimal counterexample (fewest points,
 * then fewest open sets, then lexicographically least open family) with
 * re-checkable verdicts.
 */
TOPO_API topo_status topo_check_implication_json(const char* job_json,
                                                 char** out_report_json);

/* Same traversal with search semantics: the hypotheses are the separating
 * property set and a counterexample is the sought witness space. */
TOPO_API topo_status topo_search_counterexample_json(const char* job_json,
                                                     char** out_report_json);

/* Audits the bundled reference-table claims against definitional
 * recomputation. targets_json is a JSON array of target names
 * ("section-3-1", "section-6-4", "example-1-families", "meekly-examples");
 * pass NULL for all. */
TOPO_API topo_status topo_audit_json(const char* targets_json, char** out_report_json);

TOPO_API void topo_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* TOPOCHECK_H */
