#ifndef CONCORDANCE_H
#define CONCORDANCE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_UTF8 = 2,
  // Malformed or invalid Seifert matrix text.
  CS_STATUS_PARSE = 3,
  CS_STATUS_INVALID_ARGUMENT = 4,
  // A group too large to enumerate.
  CS_STATUS_TOO_LARGE = 5,
  // The computation has no finite answer or a hypothesis failed.
  CS_STATUS_COMPUTATION = 6,
  CS_STATUS_PANIC = 7,
} CsStatus;

// Opaque finite abelian group in invariant-factor form.
typedef struct CsGroup CsGroup;

// Opaque Seifert matrix.
typedef struct CsSeifert CsSeifert;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until
// the next failing call on the same thread.
const char *cs_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void cs_string_free(char *s);

// Parses the text format: `#` comment lines, then one row per line.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CsStatus cs_seifert_parse(const char *text, struct CsSeifert **out);

// # Safety
// `out` must be writable.
enum CsStatus cs_seifert_twist(int64_t k, struct CsSeifert **out);

// # Safety
// `s` must be NULL or a handle from this library, not yet freed.
void cs_seifert_free(struct CsSeifert *s);

// Genus, or 0 for a NULL handle.
//
// # Safety
// `s` must be NULL or a live handle.
size_t cs_seifert_genus(const struct CsSeifert *s);

// Alexander polynomial as text, e.g. `-2t^2 + 5t - 2`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum CsStatus cs_alexander(const struct CsSeifert *s, char **out);

// `|H₁(Σⁿ(K))|` from the resultant, in decimal.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum CsStatus cs_order_fox(const struct CsSeifert *s, uint64_t n, char **out);

// `H₁(Σⁿ(K))` as a group handle.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum CsStatus cs_homology(const struct CsSeifert *s, uint64_t n, struct CsGroup **out);

// Number of invariant factors, or 0 for a NULL handle.
//
// # Safety
// `g` must be NULL or a live handle.
size_t cs_group_factor_count(const struct CsGroup *g);

// The `i`-th invariant factor in decimal.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum CsStatus cs_group_factor(const struct CsGroup *g, size_t i, char **out);

// # Safety
// `g` must be NULL or a handle from this library, not yet freed.
void cs_group_free(struct CsGroup *g);

// `d(L(4k+1, 2), s₀ + j)` as `"num/den"`.
//
// # Safety
// `out` must be writable.
enum CsStatus cs_d_twist(int64_t k, int64_t j, char **out);

// Twist-knot sweep as a JSON array of `{k, p, dbar, class, consistent}`.
//
// # Safety
// `out` must be writable.
enum CsStatus cs_twist_report_json(int64_t kmax, char **out);

// Square-root-order subgroup verdict as JSON. `table_json` may be NULL for
// twist knots with `n = 2`.
//
// # Safety
// `s` must be a live handle, `table_json` NULL or a NUL-terminated string,
// and `out` writable.
enum CsStatus cs_verdict_json(const struct CsSeifert *s,
                              uint64_t n,
                              const char *table_json,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONCORDANCE_H */
