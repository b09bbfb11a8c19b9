#ifndef QREALIZE_H
#define QREALIZE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum QrStatus {
  QR_STATUS_OK = 0,
  QR_STATUS_NULL_POINTER = 1,
  QR_STATUS_INVALID_UTF8 = 2,
  QR_STATUS_PARSE_ERROR = 3,
  QR_STATUS_INVALID_ARGUMENT = 4,
  QR_STATUS_VERIFICATION_FAILED = 5,
  QR_STATUS_PANIC = 6,
} QrStatus;

/*
 Opaque handle to an element of the oscillator algebra.
 */
typedef struct QrElement QrElement;

/*
 Options for [`qr_verify`]; zero fields select the suite defaults.
 */
typedef struct QrVerifyOptions {
  uint32_t nmax;
  uint32_t dim;
  /*
   Evaluate Fock entries at q = 3/2, p1 = 2, p2 = 3, p3 = 5.
   */
  bool numeric;
} QrVerifyOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. Valid until
 the next call into this library.
 */
const char *qr_last_error(void);

/*
 Library version as a static string.
 */
const char *qr_version(void);

/*
 # Safety
 `s` must be null or a string returned by this library.
 */
void qr_string_free(char *s);

/*
 Parse an expression over the oscillator algebra.

 # Safety
 `expr` must be a NUL-terminated string; `out` must be writable.
 */
enum QrStatus qr_element_parse(const char *expr, struct QrElement **out);

/*
 # Safety
 `x` must be null or a handle from this library, not yet freed.
 */
void qr_element_free(struct QrElement *x);

/*
 Product `a * b`, normal ordered.

 # Safety
 `a`, `b` must be live handles; `out` must be writable.
 */
enum QrStatus qr_element_mul(const struct QrElement *a,
                             const struct QrElement *b,
                             struct QrElement **out);

/*
 # Safety
 As [`qr_element_mul`].
 */
enum QrStatus qr_element_add(const struct QrElement *a,
                             const struct QrElement *b,
                             struct QrElement **out);

/*
 # Safety
 As [`qr_element_mul`].
 */
enum QrStatus qr_element_sub(const struct QrElement *a,
                             const struct QrElement *b,
                             struct QrElement **out);

/*
 # Safety
 `x` must be a live handle; `is_zero` must be writable.
 */
enum QrStatus qr_element_is_zero(const struct QrElement *x, bool *is_zero);

/*
 Canonical text of the element.

 # Safety
 `x` must be a live handle; `out` must be writable.
 */
enum QrStatus qr_element_render(const struct QrElement *x, char **out);

/*
 Run a verification suite by its command-line name. On `Ok` or
 `VerificationFailed`, `report` receives the rendered report.

 # Safety
 `suite` must be a NUL-terminated string; `options` may be null;
 `passed` and `report` must be writable.
 */
enum QrStatus qr_verify(const char *suite,
                        const struct QrVerifyOptions *options,
                        bool *passed,
                        char **report);

/*
 JSON export of the Fock matrix of a generator (e.g. `E12`) or an
 expression, in mode `trivial` or `fermionic`.

 # Safety
 `generator` and `mode` must be NUL-terminated strings; `out` must be
 writable.
 */
enum QrStatus qr_matrix_json(const char *generator,
                             uint32_t dim,
                             const char *mode,
                             bool numeric,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QREALIZE_H */
