#ifndef HCPACK_H
#define HCPACK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum HcpAlgorithm {
  HCP_ALGORITHM_EXACT = 0,
  HCP_ALGORITHM_GREEDY = 1,
  HCP_ALGORITHM_ANNEAL = 2,
} HcpAlgorithm;

typedef enum HcpStatus {
  HCP_STATUS_OK = 0,
  HCP_STATUS_NULL_POINTER = 1,
  HCP_STATUS_INVALID_ARGUMENT = 2,
  HCP_STATUS_DUPLICATE_CENTER = 3,
  HCP_STATUS_PARSE = 4,
  HCP_STATUS_OUT_OF_RANGE = 5,
  HCP_STATUS_WINDOW_TOO_SMALL = 6,
  HCP_STATUS_SEARCH_INCOMPLETE = 7,
  HCP_STATUS_BUFFER_TOO_SMALL = 8,
  HCP_STATUS_PANIC = 9,
} HcpStatus;

/**
 * Opaque configuration handle.
 */
typedef struct HcpConfiguration HcpConfiguration;

/**
 * Opaque search result handle.
 */
typedef struct HcpSearchResult HcpSearchResult;

/**
 * Lattice site in hexagonal coordinates.
 */
typedef struct HcpCoord {
  int64_t i;
  int64_t j;
  int64_t k;
} HcpCoord;

typedef struct HcpPoint {
  double x;
  double y;
  double z;
} HcpPoint;

/**
 * Contact between balls `a < b`, 1-based.
 */
typedef struct HcpEdge {
  size_t a;
  size_t b;
} HcpEdge;

/**
 * Search settings. Start from [`hcp_search_params_default`].
 */
typedef struct HcpSearchParams {
  size_t n;
  /**
   * Window extents along i, j, k.
   */
  int64_t window[3];
  enum HcpAlgorithm algorithm;
  uint64_t seed;
  /**
   * Wall-clock cap in seconds; negative means none.
   */
  double budget_seconds;
  size_t restarts;
  /**
   * Annealing proposals per restart.
   */
  uint64_t steps;
  /**
   * 0 uses every core, 1 runs single-threaded.
   */
  size_t threads;
  /**
   * Optional starting configuration (borrowed, may be null).
   */
  const struct HcpConfiguration *initial;
} HcpSearchParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *hcp_last_error(void);

/**
 * Static name of a status code.
 */
const char *hcp_status_name(enum HcpStatus status);

/**
 * Integer form of a pair; 12 exactly for touching balls.
 */
uint64_t hcp_pair_form(struct HcpCoord a, struct HcpCoord b);

bool hcp_is_contact(struct HcpCoord a, struct HcpCoord b);

struct HcpPoint hcp_to_cartesian(struct HcpCoord c);

/**
 * Empty configuration.
 */
struct HcpConfiguration *hcp_config_new(void);

/**
 * Configuration from `len` coordinates. Repeated sites are rejected.
 *
 * # Safety
 * `coords` must point to `len` readable values (or be null with `len == 0`);
 * `out` must be writable.
 */
enum HcpStatus hcp_config_from_coords(const struct HcpCoord *coords,
                                      size_t len,
                                      struct HcpConfiguration **out);

/**
 * Parses `.hexcfg` text (one `i j k` per line, `#` comments).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum HcpStatus hcp_config_parse(const char *text, struct HcpConfiguration **out);

/**
 * Reference configuration for `n` balls, `20 <= n <= 27`.
 *
 * # Safety
 * `out` must be writable.
 */
enum HcpStatus hcp_config_reference(size_t n, struct HcpConfiguration **out);

/**
 * Releases a configuration. Null is ignored.
 *
 * # Safety
 * `cfg` must come from this library and not be used afterwards.
 */
void hcp_config_free(struct HcpConfiguration *cfg);

/**
 * Appends a ball; fails if the site is already occupied.
 *
 * # Safety
 * `cfg` must be a live handle.
 */
enum HcpStatus hcp_config_push(struct HcpConfiguration *cfg, struct HcpCoord c);

/**
 * Number of balls; 0 for null.
 *
 * # Safety
 * `cfg` must be a live handle or null.
 */
size_t hcp_config_len(const struct HcpConfiguration *cfg);

/**
 * Ball `index` (0-based).
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be writable.
 */
enum HcpStatus hcp_config_get(const struct HcpConfiguration *cfg,
                              size_t index,
                              struct HcpCoord *out);

/**
 * # Safety
 * `cfg` must be a live handle; `out` must be writable.
 */
enum HcpStatus hcp_config_contact_count(const struct HcpConfiguration *cfg, size_t *out);

/**
 * Writes the sorted contact list into `buf`. `count` always receives the
 * number of contacts; if it exceeds `cap` nothing is written and
 * `HCP_STATUS_BUFFER_TOO_SMALL` is returned. `buf` may be null when `cap` is 0.
 *
 * # Safety
 * `cfg` must be a live handle, `buf` must have room for `cap` edges and
 * `count` must be writable.
 */
enum HcpStatus hcp_config_edges(const struct HcpConfiguration *cfg,
                                struct HcpEdge *buf,
                                size_t cap,
                                size_t *count);

/**
 * Writes the `.hexcfg` text plus a terminating nul into `buf`. `needed`
 * receives the full size including the nul.
 *
 * # Safety
 * `cfg` must be a live handle, `buf` must have room for `cap` bytes and
 * `needed` must be writable.
 */
enum HcpStatus hcp_config_serialize(const struct HcpConfiguration *cfg,
                                    char *buf,
                                    size_t cap,
                                    size_t *needed);

/**
 * Recomputes the contacts of reference configuration `n` and compares them
 * with the listed ones.
 *
 * # Safety
 * `exact_match` and `computed_count` must be writable.
 */
enum HcpStatus hcp_verify_reference(size_t n, bool *exact_match, size_t *computed_count);

/**
 * Defaults: one ball, 3x3x3 window, exact search, seed 0, no budget,
 * 8 restarts, the default annealing length, single-threaded.
 */
struct HcpSearchParams hcp_search_params_default(void);

/**
 * Runs a search. On success `*out` receives a result handle.
 *
 * # Safety
 * `params` must be readable, `params->initial` a live handle or null, and
 * `out` writable.
 */
enum HcpStatus hcp_search(const struct HcpSearchParams *params, struct HcpSearchResult **out);

/**
 * Releases a result. Null is ignored.
 *
 * # Safety
 * `res` must come from [`hcp_search`] and not be used afterwards.
 */
void hcp_result_free(struct HcpSearchResult *res);

/**
 * # Safety
 * `res` must be a live handle or null (gives 0).
 */
size_t hcp_result_best_count(const struct HcpSearchResult *res);

/**
 * True when the value is proven optimal within the window.
 *
 * # Safety
 * `res` must be a live handle or null (gives false).
 */
bool hcp_result_is_optimal(const struct HcpSearchResult *res);

/**
 * # Safety
 * `res` must be a live handle or null (gives 0).
 */
uint64_t hcp_result_nodes_explored(const struct HcpSearchResult *res);

/**
 * # Safety
 * `res` must be a live handle or null (gives 0).
 */
size_t hcp_result_witness_count(const struct HcpSearchResult *res);

/**
 * Copy of the best configuration, placed in the search window.
 *
 * # Safety
 * `res` must be a live handle; `out` must be writable.
 */
enum HcpStatus hcp_result_best(const struct HcpSearchResult *res, struct HcpConfiguration **out);

/**
 * Copy of witness `index` in canonical placement.
 *
 * # Safety
 * `res` must be a live handle; `out` must be writable.
 */
enum HcpStatus hcp_result_witness(const struct HcpSearchResult *res,
                                  size_t index,
                                  struct HcpConfiguration **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HCPACK_H */
