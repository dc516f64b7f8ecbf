/* C interface for the hopfb signed Hopf algebra library. */

#ifndef HOPFB_H
#define HOPFB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by the fallible calls.
typedef enum HopfbStatus {
  // Success.
  HOPFB_STATUS_OK = 0,
  // The verification report contains violations.
  HOPFB_STATUS_VERIFY_VIOLATIONS = 1,
  // An element string did not parse in the algebra's grammar.
  HOPFB_STATUS_PARSE_ERROR = 2,
  // An argument was out of range or otherwise unusable.
  HOPFB_STATUS_INVALID_ARGUMENT = 3,
  // A required pointer was null.
  HOPFB_STATUS_NULL_POINTER = 4,
  // An internal panic was caught; the out parameters are untouched.
  HOPFB_STATUS_INTERNAL_ERROR = 5,
} HopfbStatus;

// Opaque handle to a registered algebra.
typedef struct HopfbAlgebra HopfbAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Look up an algebra by its registry name (`dqsym`, `qsym`, `word3`,
// `lorder`, `lorder-dual`, `eh`). Returns null for unknown names. Release
// with [`hopfb_algebra_free`].
//
// # Safety
// `name` must be null or a valid NUL-terminated string.
struct HopfbAlgebra *hopfb_algebra_new(const char *name);

// Release a handle returned by [`hopfb_algebra_new`]. Null is ignored.
//
// # Safety
// `alg` must be null or an unreleased handle from [`hopfb_algebra_new`].
void hopfb_algebra_free(struct HopfbAlgebra *alg);

// The registry name of the algebra behind a handle; free the result with
// [`hopfb_string_free`]. Returns null on a null handle.
//
// # Safety
// `alg` must be null or a live handle.
char *hopfb_algebra_name(const struct HopfbAlgebra *alg);

// Release a string allocated by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void hopfb_string_free(char *s);

// Multiply two basis labels given in the algebra's grammar; the rendered
// combination is written to `out`.
//
// # Safety
// `alg` must be a live handle; `x`, `y` valid NUL-terminated strings;
// `out` a valid location for one pointer.
enum HopfbStatus hopfb_mul(const struct HopfbAlgebra *alg,
                           const char *x,
                           const char *y,
                           char **out);

// Coproduct of a basis label; tensor terms are rendered with ` (x) `.
//
// # Safety
// As for [`hopfb_mul`].
enum HopfbStatus hopfb_comul(const struct HopfbAlgebra *alg, const char *x, char **out);

// Antipode of a basis label.
//
// # Safety
// As for [`hopfb_mul`].
enum HopfbStatus hopfb_antipode(const struct HopfbAlgebra *alg, const char *x, char **out);

// Apply the sign-forgetting morphism to a `dqsym` label; the result is a
// `qsym` combination.
//
// # Safety
// `x` must be a valid NUL-terminated string, `out` a valid location.
enum HopfbStatus hopfb_map_qsym(const char *x, char **out);

// Dimension of the degree-`n` graded piece.
//
// # Safety
// `alg` must be a live handle and `out` a valid location for one `u64`.
enum HopfbStatus hopfb_graded_dimension(const struct HopfbAlgebra *alg,
                                        uint32_t degree,
                                        uint64_t *out);

// The degree-`n` basis labels as a JSON array of strings.
//
// # Safety
// As for [`hopfb_graded_dimension`], with `out` receiving a string.
enum HopfbStatus hopfb_enumerate(const struct HopfbAlgebra *alg, uint32_t degree, char **out);

// Run the exhaustive axiom verification up to `max_degree` and write the
// JSON report. Returns `Ok` when every check passes, `VerifyViolations`
// otherwise; the report is written in both cases.
//
// # Safety
// `alg` must be a live handle and `out` a valid location for one pointer.
enum HopfbStatus hopfb_verify(const struct HopfbAlgebra *alg, uint32_t max_degree, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFB_H */
