#ifndef RAAG_OUT_H
#define RAAG_OUT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RaagStatus {
  RAAG_STATUS_OK = 0,
  RAAG_STATUS_NULL_POINTER = 1,
  RAAG_STATUS_INVALID_UTF8 = 2,
  RAAG_STATUS_PARSE_ERROR = 3,
  RAAG_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The call completed but a verification verdict failed.
   */
  RAAG_STATUS_VERIFICATION_FAILED = 5,
  RAAG_STATUS_PANIC = 6,
} RaagStatus;

typedef enum RaagTarget {
  RAAG_TARGET_GAMMA = 0,
  RAAG_TARGET_GAMMA_PRIME = 1,
} RaagTarget;

/**
 * Opaque graph handle.
 */
typedef struct RaagGraph RaagGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RaagStatus raag_graph_from_graph6(const char *text, struct RaagGraph **out);

/**
 * Parses an edge list: vertex labels on the first line, one `u v` pair per
 * following line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RaagStatus raag_graph_from_edge_list(const char *text, struct RaagGraph **out);

/**
 * One of the fixed graphs for Λ with one or two vertices (`which` in 1..=3).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RaagStatus raag_graph_appendix(uint8_t which, struct RaagGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void raag_graph_free(struct RaagGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t raag_graph_order(const struct RaagGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t raag_graph_size(const struct RaagGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_graph_to_graph6(const struct RaagGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_graph_to_edge_list(const struct RaagGraph *g, char **out);

/**
 * Builds the graph realizing A_Λ (the appendix graphs for fewer than three
 * vertices).
 *
 * # Safety
 * `lambda` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_build(const struct RaagGraph *lambda,
                           enum RaagTarget target,
                           struct RaagGraph **out);

/**
 * Full analysis report as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_analyze_json(const struct RaagGraph *g, char **out);

/**
 * Builds and verifies the construction for Λ. The JSON result is written
 * even when a verdict fails, in which case the status is
 * `RAAG_STATUS_VERIFICATION_FAILED`.
 *
 * # Safety
 * `lambda` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_verify_json(const struct RaagGraph *lambda,
                                 enum RaagTarget target,
                                 char **out);

/**
 * graph6 of the canonical relabeling.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_canonical_form(const struct RaagGraph *g, char **out);

/**
 * Order of the automorphism group as a decimal string.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RaagStatus raag_aut_order(const struct RaagGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void raag_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next failing call on the same thread.
 */
const char *raag_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAAG_OUT_H */
