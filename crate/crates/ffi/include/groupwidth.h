#ifndef GROUPWIDTH_H
#define GROUPWIDTH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum GwStatus {
  GW_STATUS_OK = 0,
  GW_STATUS_NULL_POINTER = 1,
  GW_STATUS_INVALID_ARGUMENT = 2,
  GW_STATUS_INVALID_LABELING = 3,
  GW_STATUS_MISSING_LABELS = 4,
  GW_STATUS_NOT_CONNECTED = 5,
  GW_STATUS_PARSE = 6,
  GW_STATUS_BUFFER_TOO_SMALL = 7,
  GW_STATUS_PANIC = 8,
} GwStatus;

// Opaque complex with an optional labeling.
typedef struct GwComplex GwComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the next call.
const char *gw_last_error(void);

// The `m`-cycle.
enum GwStatus gw_circle_new(size_t m, struct GwComplex **out);

// Freudenthal torus of dimension `dim` with `res` vertices per axis.
enum GwStatus gw_torus_new(size_t dim, size_t res, struct GwComplex **out);

// Parses SCX text (NUL-terminated UTF-8).
enum GwStatus gw_complex_from_scx(const char *text, struct GwComplex **out);

// Writes the complex and its labels as SCX text; free with `gw_string_free`.
enum GwStatus gw_complex_to_scx(const struct GwComplex *k, char **out);

void gw_complex_free(struct GwComplex *k);

void gw_string_free(char *s);

// Number of vertices, or 0 for NULL.
size_t gw_complex_vertex_count(const struct GwComplex *k);

// Replaces the labeling; `len` must equal the vertex count.
enum GwStatus gw_complex_set_labels(struct GwComplex *k, const int64_t *labels, size_t len);

// Sets the tent labeling along `axis`; the complex must come from the torus or circle generator.
enum GwStatus gw_complex_set_tent(struct GwComplex *k, size_t axis);

// Copies the labeling into `buf`, which must hold `len >= vertex count` entries.
enum GwStatus gw_complex_get_labels(const struct GwComplex *k, int64_t *buf, size_t len);

// First Betti number over the field `p`.
enum GwStatus gw_betti1(const struct GwComplex *k, uint64_t p, size_t *out);

// Width of the current labeling over the field `p`.
enum GwStatus gw_hcwr(const struct GwComplex *k, uint64_t p, size_t *out);

// Full width report of the current labeling as JSON; free with `gw_string_free`.
enum GwStatus gw_report_json(const struct GwComplex *k, uint64_t p, char **out);

// Exhaustive minimization; `budget_ms == 0` means no limit. On success the
// certificate becomes the handle's labeling.
enum GwStatus gw_exhaustive_min(struct GwComplex *k,
                                uint64_t p,
                                uint64_t budget_ms,
                                size_t *best,
                                bool *exhaustive);

// Annealing with the default schedule and `seed`. On success the
// certificate becomes the handle's labeling.
enum GwStatus gw_anneal_min(struct GwComplex *k, uint64_t p, uint64_t seed, size_t *best);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GROUPWIDTH_H */
