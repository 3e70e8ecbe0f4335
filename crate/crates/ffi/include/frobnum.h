#ifndef FROBNUM_H
#define FROBNUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdint.h>
#include <stddef.h>

#define FROBNUM_OK 0

/*
 A checked statement was violated or an internal cross-check failed.
 */
#define FROBNUM_VIOLATION 1

#define FROBNUM_PARSE_ERROR 2

#define FROBNUM_CAP_EXCEEDED 3

#define FROBNUM_PRECONDITION 4

/*
 Null pointer or non-UTF-8 string argument.
 */
#define FROBNUM_INVALID_ARGUMENT 5

/*
 The library panicked; this is a bug.
 */
#define FROBNUM_PANIC 6

/*
 A built group with its element table and counting caches.
 */
typedef struct FrobnumGroup FrobnumGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds the group described by `spec` (e.g. `"GL2(4)"`) with default caps.

 # Safety
 `spec` must be a NUL-terminated string; `out` must be writable.
 */
int32_t frobnum_group_new(const char *spec, struct FrobnumGroup **out);

/*
 Releases a group; null is ignored.

 # Safety
 `group` must come from `frobnum_group_new` and not be used afterwards.
 */
void frobnum_group_free(struct FrobnumGroup *group);

/*
 # Safety
 `group` must be a live handle; `out` must be writable.
 */
int32_t frobnum_group_order(const struct FrobnumGroup *group, uint64_t *out);

/*
 Number of points the group acts on.

 # Safety
 `group` must be a live handle; `out` must be writable.
 */
int32_t frobnum_group_degree(const struct FrobnumGroup *group, uint64_t *out);

/*
 Number of subgroups of order `p^a`.

 # Safety
 `group` must be a live handle; `out` must be writable.
 */
int32_t frobnum_count_subgroups(const struct FrobnumGroup *group,
                                uint64_t p,
                                uint32_t a,
                                uint64_t *out);

/*
 Number of Sylow p-subgroups.

 # Safety
 `group` must be a live handle; `out` must be writable.
 */
int32_t frobnum_count_sylow(const struct FrobnumGroup *group, uint64_t p, uint64_t *out);

/*
 The count of subgroups of order `p^a` as a JSON report.

 # Safety
 `group` must be a live handle; `out` must be writable. Free the result with
 `frobnum_string_free`.
 */
int32_t frobnum_count_report_json(const struct FrobnumGroup *group,
                                  uint64_t p,
                                  uint32_t a,
                                  char **out);

/*
 Closed-form number of subgroups of order `p^a` in the abelian p-group
 whose cyclic factors have orders `p^parts[i]`, as a decimal string.

 # Safety
 `parts` must point to `len` readable values (or be null with `len = 0`);
 `out` must be writable. Free the result with `frobnum_string_free`.
 */
int32_t frobnum_hall_count_order(const uint32_t *parts,
                                 uintptr_t len,
                                 uint32_t a,
                                 uint64_t p,
                                 char **out);

/*
 Classifies `n` against the shipped corpus; the verdict is returned as JSON.

 # Safety
 `out` must be writable. Free the result with `frobnum_string_free`.
 */
int32_t frobnum_classify_json(uint64_t p, uint64_t n, char **out);

/*
 Releases a string returned by this library; null is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void frobnum_string_free(char *s);

/*
 Message for the last failed call on this thread, or null. Valid until the
 next call into the library on the same thread.
 */
const char *frobnum_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FROBNUM_H */
