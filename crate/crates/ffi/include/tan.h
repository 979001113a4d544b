#ifndef TAN_H
#define TAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TanSignConvention {
  TAN_SIGN_CONVENTION_KOSZUL = 0,
  TAN_SIGN_CONVENTION_PLAIN = 1,
} TanSignConvention;

/**
 * Result of every call.
 */
typedef enum TanStatus {
  TAN_STATUS_OK = 0,
  TAN_STATUS_VERIFICATION_FAILED = 1,
  TAN_STATUS_INVALID_INPUT = 2,
  TAN_STATUS_NULL_POINTER = 3,
  TAN_STATUS_INTERNAL = 4,
} TanStatus;

/**
 * Opaque handle to a loaded category.
 */
typedef struct TanCategory TanCategory;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a JSON category spec. `field` may be null to keep the field named in
 * the spec. On success `*out` owns a handle released by `tan_category_free`.
 *
 * # Safety
 * `json` and a non-null `field` must be nul-terminated strings; `out` must be writable.
 */
enum TanStatus tan_category_load_json(const char *json,
                                      const char *field,
                                      struct TanCategory **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `cat` must come from `tan_category_load_json` and not be used afterwards.
 */
void tan_category_free(struct TanCategory *cat);

/**
 * Number of objects.
 *
 * # Safety
 * `cat` must be a live handle; `out` must be writable.
 */
enum TanStatus tan_category_object_count(const struct TanCategory *cat, uintptr_t *out);

/**
 * Dimension of the nerve component at the necklace with comma-separated
 * bead lengths `beads` (empty for Δ⁰) between the named objects.
 *
 * # Safety
 * `cat` must be a live handle; strings nul-terminated; `out` writable.
 */
enum TanStatus tan_nerve_dimension(const struct TanCategory *cat,
                                   const char *beads,
                                   const char *from,
                                   const char *to,
                                   enum TanSignConvention convention,
                                   uintptr_t *out);

/**
 * Checks the A∞ relations up to arity `kmax` (0 selects the default) and the
 * units. Returns `Ok` or `VerificationFailed`; when `report` is non-null it
 * receives the JSON report, released by `tan_string_free`.
 *
 * # Safety
 * `cat` must be a live handle; `report` null or writable.
 */
enum TanStatus tan_check_relations(const struct TanCategory *cat, uintptr_t kmax, char **report);

/**
 * Fills the inner horn given as JSON and writes the filler as JSON to `*out`.
 * An incompatible horn returns `VerificationFailed` with the violations in
 * the last-error message.
 *
 * # Safety
 * `cat` must be a live handle; `horn_json` nul-terminated; `out` writable.
 */
enum TanStatus tan_horn_fill_json(const struct TanCategory *cat,
                                  const char *horn_json,
                                  enum TanSignConvention convention,
                                  char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void tan_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *tan_last_error(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TAN_H */
