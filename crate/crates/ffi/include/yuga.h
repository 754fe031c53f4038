#ifndef YUGA_H
#define YUGA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum YugaStatus {
  YUGA_STATUS_OK = 0,
  YUGA_STATUS_NULL_POINTER = 1,
  YUGA_STATUS_ZERO_DENOMINATOR = 2,
  YUGA_STATUS_DOMAIN = 3,
  YUGA_STATUS_RANGE = 4,
  YUGA_STATUS_NOT_DIVISIBLE = 5,
  YUGA_STATUS_INVALID_MONTH = 6,
  YUGA_STATUS_EMPTY_PILE = 7,
  YUGA_STATUS_PARSE = 8,
  YUGA_STATUS_BUFFER_TOO_SMALL = 9,
  YUGA_STATUS_OVERFLOW = 10,
} YugaStatus;

typedef enum YugaAyana {
  YUGA_AYANA_NORTHERN = 0,
  YUGA_AYANA_SOUTHERN = 1,
} YugaAyana;

typedef enum YugaPaksha {
  YUGA_PAKSHA_BRIGHT = 0,
  YUGA_PAKSHA_DARK = 1,
} YugaPaksha;

/**
 * Opaque exact fraction.
 */
typedef struct YugaRational YugaRational;

/**
 * Opaque list of named numbers.
 */
typedef struct YugaSeries YugaSeries;

/**
 * Position on the nakshatra circle. `nakshatra_index` is 0-based from
 * Dhanishthā; `offset_numer/offset_denom` is the part of it covered.
 */
typedef struct YugaSkyPosition {
  uint32_t nakshatra_index;
  uint64_t offset_numer;
  uint64_t offset_denom;
} YugaSkyPosition;

typedef struct YugaDayRecord {
  uint64_t day_index;
  uint32_t year_in_yuga;
  enum YugaAyana ayana;
  uint32_t season_index;
  uint32_t parva_index;
  enum YugaPaksha paksha;
  uint32_t tithi_ordinal;
  struct YugaSkyPosition moon;
  struct YugaSkyPosition sun;
} YugaDayRecord;

/**
 * Six 1-based components, most significant first.
 */
typedef struct YugaSegmentName {
  uint32_t year;
  uint32_t month;
  uint32_t parva;
  uint32_t ahoratra_slot;
  uint32_t muhurta;
  uint32_t prati_muhurta;
} YugaSegmentName;

typedef struct YugaSplit {
  uint64_t bodies;
  uint64_t size_per_body;
  uint64_t steps;
} YugaSplit;

typedef struct YugaTax {
  uint64_t tax;
  uint64_t kept;
  uint64_t remainder_untaxed;
  uint64_t steps;
} YugaTax;

typedef struct YugaProduct {
  uint64_t product;
  uint64_t rounds;
  uint64_t token_moves;
} YugaProduct;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL if none.
 * Free with [`yuga_string_free`].
 */
char *yuga_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void yuga_string_free(char *s);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_moon_at_parva_end(uint64_t k, struct YugaSkyPosition *out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_moon_at_day(uint64_t day, struct YugaSkyPosition *out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_sun_at_day(uint64_t day, struct YugaSkyPosition *out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_day_record(uint64_t day, struct YugaDayRecord *out);

uint64_t yuga_name_total_segments(void);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_name_encode(uint64_t index, struct YugaSegmentName *out);

/**
 * # Safety
 * `name` must be NULL or point to a valid struct; `out` must be NULL or
 * valid for writes.
 */
enum YugaStatus yuga_name_decode(const struct YugaSegmentName *name, uint64_t *out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_equal_split(uint64_t total, uint64_t bodies, struct YugaSplit *out);

/**
 * # Safety
 * `out` must be NULL or valid for `capacity` writes; `out_len` must be
 * valid for writes.
 */
enum YugaStatus yuga_enumerate_splits(uint64_t total,
                                      uint64_t max_bodies,
                                      struct YugaSplit *out,
                                      size_t capacity,
                                      size_t *out_len);

/**
 * # Safety
 * `months` must be valid for `count` reads (or NULL when `count` is 0);
 * `out` must be valid for `capacity` writes; `out_len` for one write.
 */
enum YugaStatus yuga_sadaha_partition(const uint32_t *months,
                                      size_t count,
                                      uint32_t *out,
                                      size_t capacity,
                                      size_t *out_len);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_tax_in_kind(uint64_t measures, uint64_t divisor, struct YugaTax *out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum YugaStatus yuga_repeated_addition_product(uint64_t a, uint64_t b, struct YugaProduct *out);

/**
 * Parses `"n"`, `"n/d"` or `"-n/d"` into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` valid for writes.
 */
enum YugaStatus yuga_rational_parse(const char *text, struct YugaRational **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` valid for writes.
 */
enum YugaStatus yuga_rational_add(const struct YugaRational *a,
                                  const struct YugaRational *b,
                                  struct YugaRational **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` valid for writes.
 */
enum YugaStatus yuga_rational_mul(const struct YugaRational *a,
                                  const struct YugaRational *b,
                                  struct YugaRational **out);

/**
 * Solves `a/b = c/d` for `a`.
 *
 * # Safety
 * `b`, `c`, `d` must be live handles; `out` valid for writes.
 */
enum YugaStatus yuga_rational_rule_of_three(const struct YugaRational *b,
                                            const struct YugaRational *c,
                                            const struct YugaRational *d,
                                            struct YugaRational **out);

/**
 * `"n/d"` form, or NULL for a NULL handle.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
char *yuga_rational_to_string(const struct YugaRational *r);

/**
 * `"w n/d"` form; NULL for a NULL handle or a negative value.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
char *yuga_rational_to_mixed_string(const struct YugaRational *r);

/**
 * Decimal text rounded half-up to `places` digits.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
char *yuga_rational_render_decimal(const struct YugaRational *r, uint32_t places);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, not yet freed.
 */
void yuga_rational_free(struct YugaRational *r);

/**
 * eka (1) through parārdha (10^12).
 */
struct YugaSeries *yuga_series_decimal(void);

/**
 * The 24-term centesimal series from 10^9.
 */
struct YugaSeries *yuga_series_centesimal(void);

/**
 * Sixth square of two, fifth square of two, and their product.
 */
struct YugaSeries *yuga_series_jain(void);

/**
 * Names recorded for a decimal value, as a series whose entries all carry
 * that value. NULL on a parse failure.
 *
 * # Safety
 * `value` must be a NUL-terminated string.
 */
struct YugaSeries *yuga_variant_lookup(const char *value);

/**
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t yuga_series_len(const struct YugaSeries *s);

/**
 * Decimal digits of entry `i`; NULL when out of range.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
char *yuga_series_value(const struct YugaSeries *s, size_t i);

/**
 * Name of entry `i`, or `"term N"` for unnamed terms; NULL when out of range.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
char *yuga_series_label(const struct YugaSeries *s, size_t i);

/**
 * Static tradition name of entry `i`; do not free. NULL when out of range.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
const char *yuga_series_tradition(const struct YugaSeries *s, size_t i);

/**
 * # Safety
 * `s` must be NULL or a handle from this library, not yet freed.
 */
void yuga_series_free(struct YugaSeries *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YUGA_H */
