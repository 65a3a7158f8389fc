#ifndef IGBDD_H
#define IGBDD_H

/* C interface of the interval-graph BDD library.
 *
 * All objects are opaque handles created and released through these
 * functions. Calls return igbdd_status; on any failure the handle outputs are
 * left untouched and igbdd_last_error() describes the problem until the next
 * failing call on the same thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum igbdd_status {
  IGBDD_OK = 0,
  IGBDD_ERROR_DOMAIN = 1,   /* invalid argument or contract violation */
  IGBDD_ERROR_NOMEM = 2,    /* allocation failure */
  IGBDD_ERROR_INTERNAL = 3, /* unexpected library failure */
} igbdd_status;

/* A family of closed intervals with integer endpoints, labeled by ascending
 * left endpoint. */
typedef struct igbdd_intervals igbdd_intervals;

/* A finished symbolic computation over one interval family. The handle keeps
 * results and statistics only; the node store is released before it returns. */
typedef struct igbdd_run igbdd_run;

/* Operation counters of one phase of a run. */
typedef struct igbdd_op_counts {
  uint64_t syntheses;
  uint64_t negations;
  uint64_t quantifier_blocks;
  uint64_t quantifier_bit_ops;
  uint64_t argument_reorders;
  uint64_t peak_store_nodes;
} igbdd_op_counts;

const char* igbdd_version(void);
/* Name of the seeded pseudo-random generator, for reproducibility headers. */
const char* igbdd_rng_name(void);
/* Message of the last failing call on this thread, or an empty string. */
const char* igbdd_last_error(void);

/* --- interval families ------------------------------------------------- */

/* Copies `count` intervals [lefts[i], rights[i]]. `unit` marks a proper
 * family (no containment); the invariants are validated. */
igbdd_status igbdd_intervals_create(const int64_t* lefts, const int64_t* rights,
                                    size_t count, int unit, igbdd_intervals** out);

/* Uniform random unit family of `count` intervals (balanced-string model). */
igbdd_status igbdd_intervals_random_unit(size_t count, uint64_t seed,
                                         igbdd_intervals** out);

/* `count` intervals over distinct endpoints from {0, .., span-1}; requires
 * span >= 2*count. */
igbdd_status igbdd_intervals_random_general(size_t count, int64_t span, uint64_t seed,
                                            igbdd_intervals** out);

/* Randomized near-worst-case family; `count` must be a power of two. */
igbdd_status igbdd_intervals_worst_case(size_t count, uint64_t seed,
                                        igbdd_intervals** out);

/* Parses the interval-list text format ("a b" per line, '#' comments,
 * optional "unit" directive); the inverse of igbdd_intervals_to_text. */
igbdd_status igbdd_intervals_from_text(const char* text, igbdd_intervals** out);

/* Serializes to the text format. Free the string with igbdd_text_free. */
igbdd_status igbdd_intervals_to_text(const igbdd_intervals* iv, char** out_text);

igbdd_status igbdd_intervals_size(const igbdd_intervals* iv, size_t* out);
igbdd_status igbdd_intervals_is_unit(const igbdd_intervals* iv, int* out);
igbdd_status igbdd_intervals_at(const igbdd_intervals* iv, size_t index,
                                int64_t* left, int64_t* right);
void igbdd_intervals_free(igbdd_intervals* iv);
void igbdd_text_free(char* text);

/* --- symbolic runs ------------------------------------------------------ */

/* Builds the edge relation and records its size statistics. */
igbdd_status igbdd_encode_stats(const igbdd_intervals* iv, igbdd_run** out);

/* Implicit maximum matching; the family must be unit. */
igbdd_status igbdd_match(const igbdd_intervals* iv, igbdd_run** out);

/* Implicit minimum coloring. `general_mode` nonzero runs the variant for
 * arbitrary families; zero runs the unit variant (family must be unit). */
igbdd_status igbdd_color(const igbdd_intervals* iv, int general_mode, igbdd_run** out);

void igbdd_run_free(igbdd_run* run);

/* --- run inspection ------------------------------------------------------ */

/* One of "encode", "match", "color-unit", "color-general"; owned by the run. */
const char* igbdd_run_algorithm(const igbdd_run* run);

igbdd_status igbdd_run_vertex_count(const igbdd_run* run, uint64_t* out);
/* Bits per label vector. */
igbdd_status igbdd_run_bits(const igbdd_run* run, uint32_t* out);
/* Nodes of the edge relation, reachable sinks included. */
igbdd_status igbdd_run_chi_e_size(const igbdd_run* run, uint64_t* out);
/* Matching cardinality, number of colors, or the edge-relation size for
 * encode-only runs. */
igbdd_status igbdd_run_result_size(const igbdd_run* run, uint64_t* out);
/* Largest node count the store reached during the run. */
igbdd_status igbdd_run_peak_nodes(const igbdd_run* run, uint64_t* out);
igbdd_status igbdd_run_encode_ops(const igbdd_run* run, igbdd_op_counts* out);
igbdd_status igbdd_run_algorithm_ops(const igbdd_run* run, igbdd_op_counts* out);

/* Inner nodes of the edge relation per level, most significant bit first
 * (2 * bits entries, x and y interleaved). Writes min(capacity, needed)
 * entries; `needed` may be null. */
igbdd_status igbdd_run_level_profile(const igbdd_run* run, uint64_t* buffer,
                                     size_t capacity, size_t* needed);

igbdd_status igbdd_run_pair_count(const igbdd_run* run, size_t* out);
igbdd_status igbdd_run_pair_at(const igbdd_run* run, size_t index,
                               uint64_t* a, uint64_t* b);
igbdd_status igbdd_run_colors_used(const igbdd_run* run, uint64_t* out);
igbdd_status igbdd_run_color_at(const igbdd_run* run, size_t vertex, uint64_t* out);

/* --- explicit baselines -------------------------------------------------- */

/* Maximum matching cardinality by the left-to-right scan; family must be unit. */
igbdd_status igbdd_oracle_matching_size(const igbdd_intervals* iv, uint64_t* out);

/* Minimum color count, equal to the maximum point overlap. */
igbdd_status igbdd_oracle_color_count(const igbdd_intervals* iv, uint64_t* out);

/* Sets *ok to 1 when the run's coloring is proper on the family and uses a
 * dense color range 0 .. colors_used-1, else to 0. */
igbdd_status igbdd_check_coloring(const igbdd_intervals* iv, const igbdd_run* run,
                                  int* ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IGBDD_H */
