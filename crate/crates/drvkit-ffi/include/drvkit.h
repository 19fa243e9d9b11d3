#ifndef DRVKIT_H
#define DRVKIT_H

/* This header is generated by cbindgen from drvkit-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes of every fallible entry point.
typedef enum DrvStatus {
  DRV_STATUS_OK = 0,
  DRV_STATUS_NULL_POINTER = 1,
  DRV_STATUS_INVALID_UTF8 = 2,
  // Bad input data: unknown families, invalid tables, malformed JSON,
  // uncertified derivations, cap violations.
  DRV_STATUS_VALIDATION_FAILED = 3,
  // A broken internal invariant; never expected.
  DRV_STATUS_INTERNAL_ERROR = 4,
} DrvStatus;

// Opaque handle to a validated finite group.
typedef struct DrvGroup DrvGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The
// pointer stays valid until the next failing call on the same thread.
const char *drv_last_error(void);

// Library version as a static NUL-terminated string.
const char *drv_version(void);

// Build a group from a canonical family name such as "S3" or "C2xC4".
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum DrvStatus drv_group_from_name(const char *name, struct DrvGroup **out);

// Build a group from a row-major `order`×`order` Cayley table of
// element indices; the table is fully validated.
//
// # Safety
// `table` must point to `order * order` readable entries.
enum DrvStatus drv_group_from_table(size_t order, const size_t *table, struct DrvGroup **out);

// Release a group handle. Passing NULL is a no-op.
//
// # Safety
// `group` must have come from this library and not be freed twice.
void drv_group_free(struct DrvGroup *group);

// Number of elements; 0 for a NULL handle.
//
// # Safety
// `group` must be a live handle or NULL.
size_t drv_group_order(const struct DrvGroup *group);

// Index of the identity element.
//
// # Safety
// `group` must be a live handle or NULL.
size_t drv_group_identity(const struct DrvGroup *group);

// Product of elements i and j; `usize::MAX` on a bad handle or index.
//
// # Safety
// `group` must be a live handle or NULL.
size_t drv_group_op(const struct DrvGroup *group, size_t i, size_t j);

// Inverse of element i; `usize::MAX` on a bad handle or index.
//
// # Safety
// `group` must be a live handle or NULL.
size_t drv_group_inverse(const struct DrvGroup *group, size_t i);

// Number of conjugacy classes; 0 on a bad handle.
//
// # Safety
// `group` must be a live handle or NULL.
size_t drv_group_class_count(const struct DrvGroup *group);

// Index of the conjugacy class containing element i, classes ordered by
// least representative; `usize::MAX` on a bad handle or index.
//
// # Safety
// `group` must be a live handle or NULL.
size_t drv_group_class_of(const struct DrvGroup *group, size_t i);

// Display label of element i as a freshly allocated string; NULL on a
// bad handle or index. Release with `drv_string_free`.
//
// # Safety
// `group` must be a live handle or NULL.
char *drv_group_label(const struct DrvGroup *group, size_t i);

// Run one engine request described as JSON and return the report as a
// freshly allocated JSON string in `out_report`. The request mirrors
// the CLI: {"command": "...", "group": "S3" | {...}, "ring": ...,
// "sigma": ..., "tau": ..., "derivation": {...}}. Release the report
// with `drv_string_free`.
//
// # Safety
// `request_json` must be NUL-terminated; `out_report` must be valid.
enum DrvStatus drv_run_json(const char *request_json, char **out_report);

// Release a string allocated by this library. Passing NULL is a no-op.
//
// # Safety
// `s` must have come from this library and not be freed twice.
void drv_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DRVKIT_H */
