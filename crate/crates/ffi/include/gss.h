#ifndef GSS_H
#define GSS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every call.
typedef enum GssStatus {
  GSS_STATUS_OK = 0,
  GSS_STATUS_NULL_POINTER = 1,
  GSS_STATUS_INVALID_UTF8 = 2,
  GSS_STATUS_PARSE = 3,
  GSS_STATUS_INVALID_ARGUMENT = 4,
  GSS_STATUS_OUT_OF_RANGE = 5,
  GSS_STATUS_NOT_APPLICABLE = 6,
  GSS_STATUS_PANIC = 7,
} GssStatus;

typedef enum GssClass {
  GSS_CLASS_ENOKI = 0,
  GSS_CLASS_ODD_INOUE_HIRZEBRUCH = 1,
  GSS_CLASS_EVEN_INOUE_HIRZEBRUCH = 2,
  GSS_CLASS_INTERMEDIATE = 3,
} GssClass;

// An intersection form.
typedef struct GssForm GssForm;

// A polynomial given by its allowed subsets.
typedef struct GssPolynomial GssPolynomial;

// A parsed cyclic word.
typedef struct GssWord GssWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next `gss_*` call on the same thread.
const char *gss_last_error(void);

// # Safety
// `s` is null or a string returned by this library and not yet freed.
void gss_string_free(char *s);

// Parses text such as `"s2 r1 s1 r1"`.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum GssStatus gss_word_parse(const char *text, struct GssWord **out);

// # Safety
// `w` is null or a handle from this library not yet freed.
void gss_word_free(struct GssWord *w);

// Least rotation of the word, as a new handle.
//
// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_word_canonical(const struct GssWord *w, struct GssWord **out);

// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_word_to_string(const struct GssWord *w, char **out);

// Total length `n`, number of singular parts `N` and of regular parts.
//
// # Safety
// `w` is a live word handle; each out pointer is null or writable.
enum GssStatus gss_word_counts(const struct GssWord *w,
                               size_t *n,
                               size_t *singular,
                               size_t *regular);

// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_word_class(const struct GssWord *w, enum GssClass *out);

// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_form_build(const struct GssWord *w, struct GssForm **out);

// # Safety
// `f` is null or a handle from this library not yet freed.
void gss_form_free(struct GssForm *f);

// # Safety
// `f` is a live form handle; `out` is writable.
enum GssStatus gss_form_order(const struct GssForm *f, size_t *out);

// Entry `(i, j)` in the positive convention.
//
// # Safety
// `f` is a live form handle; `out` is writable.
enum GssStatus gss_form_entry(const struct GssForm *f, size_t i, size_t j, int64_t *out);

// # Safety
// `f` is a live form handle; `out` is writable.
enum GssStatus gss_form_determinant(const struct GssForm *f, char **out);

// # Safety
// `f` is a live form handle; `out` is writable.
enum GssStatus gss_form_is_positive_definite(const struct GssForm *f, bool *out);

// `det M(w)` as a decimal string.
//
// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_discriminant(const struct GssWord *w, char **out);

// Square root of the discriminant, from the polynomial side.
// `NotApplicable` for words without singular parts.
//
// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_lattice_index(const struct GssWord *w, char **out);

// Product of branch determinants. `NotApplicable` unless the word has both
// singular and regular parts.
//
// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_twisting_coefficient(const struct GssWord *w, char **out);

// Runs every identity check on one word. `passed` is false if any fails.
//
// # Safety
// `w` is a live word handle; `passed` is writable; `report_json` is null or writable.
enum GssStatus gss_verify_word(const struct GssWord *w, bool *passed, char **report_json);

// Checks every canonical word of length at most `max_n`.
//
// # Safety
// `words` and `failures` are writable.
enum GssStatus gss_verify_all(size_t max_n, size_t *words, size_t *failures);

// Polynomial of the mark set `marks[0..marks_len]` in `Z/nZ`.
//
// # Safety
// `marks` points to `marks_len` readable values (may be null when
// `marks_len` is 0); `out` is writable.
enum GssStatus gss_poly_new(size_t n,
                            const size_t *marks,
                            size_t marks_len,
                            struct GssPolynomial **out);

// Polynomial of the word's mark set. `NotApplicable` without singular parts.
//
// # Safety
// `w` is a live word handle; `out` is writable.
enum GssStatus gss_poly_from_word(const struct GssWord *w, struct GssPolynomial **out);

// # Safety
// `p` is null or a handle from this library not yet freed.
void gss_poly_free(struct GssPolynomial *p);

// # Safety
// `p` is a live polynomial handle; `out` is writable.
enum GssStatus gss_poly_nvars(const struct GssPolynomial *p, size_t *out);

// Text form, e.g. `"X0*X1 + X0 + X1"`.
//
// # Safety
// `p` is a live polynomial handle; `out` is writable.
enum GssStatus gss_poly_to_string(const struct GssPolynomial *p, char **out);

// Exact value at `values[0..len]`, as a decimal string.
//
// # Safety
// `p` is a live polynomial handle; `values` points to `len` readable values
// (may be null when `len` is 0); `out` is writable.
enum GssStatus gss_poly_eval(const struct GssPolynomial *p,
                             const int64_t *values,
                             size_t len,
                             char **out);

// Library version, static storage.
const char *gss_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GSS_H */
