#ifndef PIREG_H
#define PIREG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PiregStatus {
  PIREG_STATUS_OK = 0,
  PIREG_STATUS_NULL_POINTER = 1,
  PIREG_STATUS_INVALID_UTF8 = 2,
  PIREG_STATUS_PARSE = 3,
  PIREG_STATUS_INVALID_ARGUMENT = 4,
  PIREG_STATUS_UNDECIDED = 5,
  PIREG_STATUS_SIZE_CAP = 6,
  PIREG_STATUS_UNKNOWN_SUITE = 7,
  PIREG_STATUS_INTERNAL = 8,
} PiregStatus;

typedef enum PiregNilpotency {
  PIREG_NILPOTENCY_NILPOTENT = 0,
  PIREG_NILPOTENCY_NOT_NILPOTENT = 1,
  PIREG_NILPOTENCY_UNDECIDED = 2,
} PiregNilpotency;

typedef enum PiregVerdict {
  PIREG_VERDICT_PASS = 0,
  PIREG_VERDICT_FAIL = 1,
  PIREG_VERDICT_UNDECIDED = 2,
} PiregVerdict;

// Opaque ring element.
typedef struct PiregElement PiregElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The
// pointer stays valid until the next failing call on the same thread.
const char *pireg_last_error(void);

// Parses an element such as `"a + xa^2"`.
//
// # Safety
// `text` must be a valid C string and `out` a writable pointer.
enum PiregStatus pireg_element_parse(const char *text, struct PiregElement **out);

// # Safety
// `e` must be null or a handle from this library not yet freed.
void pireg_element_free(struct PiregElement *e);

// Reduced form as a newly allocated string.
//
// # Safety
// `e` must be a live handle and `out` a writable pointer.
enum PiregStatus pireg_element_to_string(const struct PiregElement *e, char **out);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void pireg_string_free(char *s);

// # Safety
// `a`, `b` must be live handles and `out` a writable pointer.
enum PiregStatus pireg_element_add(const struct PiregElement *a,
                                   const struct PiregElement *b,
                                   struct PiregElement **out);

// # Safety
// `a`, `b` must be live handles and `out` a writable pointer.
enum PiregStatus pireg_element_mul(const struct PiregElement *a,
                                   const struct PiregElement *b,
                                   struct PiregElement **out);

// # Safety
// `a` must be a live handle and `out` a writable pointer.
enum PiregStatus pireg_element_pow(const struct PiregElement *a,
                                   uint32_t k,
                                   struct PiregElement **out);

// Compares two single monomials; writes -1, 0 or 1.
//
// # Safety
// `a`, `b` must be live handles and `out` a writable pointer.
enum PiregStatus pireg_monomial_cmp(const struct PiregElement *a,
                                    const struct PiregElement *b,
                                    int32_t *out);

// Runs the chain procedure. For nilpotent input `index` receives the
// nilpotency index and `chain_len` the chain length; both are 0 otherwise.
//
// # Safety
// `e` must be a live handle and the output pointers writable.
enum PiregStatus pireg_nilpotent(const struct PiregElement *e,
                                 size_t cap,
                                 enum PiregNilpotency *verdict_out,
                                 uint32_t *index,
                                 size_t *chain_len);

// Inverse of a unit. For a non-unit `*out` is set to null.
//
// # Safety
// `e` must be a live handle and `out` a writable pointer.
enum PiregStatus pireg_inverse(const struct PiregElement *e, struct PiregElement **out);

// Dimensions of the right and left annihilators truncated at `bound`.
//
// # Safety
// `e` must be a live handle and the output pointers writable.
enum PiregStatus pireg_annihilator_dims(const struct PiregElement *e,
                                        size_t bound,
                                        size_t *right,
                                        size_t *left);

// Searches for `y` of length at most `bound` with `f = y f^2`; `*out` is
// null when none exists.
//
// # Safety
// `e` must be a live handle and `out` a writable pointer.
enum PiregStatus pireg_srsolve(const struct PiregElement *e,
                               size_t bound,
                               struct PiregElement **out);

// Runs a named verification suite with its default sizes. The report is
// written as text, or JSON when `json` is true.
//
// # Safety
// `name` must be a valid C string and the output pointers writable.
enum PiregStatus pireg_verify_suite(const char *name,
                                    uint64_t seed,
                                    bool json,
                                    enum PiregVerdict *verdict_out,
                                    char **report);

// Builds the finite ring described by `spec` (e.g. `"M2(F2)"`) and runs
// the exhaustive equivalence checks on it.
//
// # Safety
// `spec` must be a valid C string and the output pointers writable.
enum PiregStatus pireg_finring_check(const char *spec,
                                     size_t *order,
                                     enum PiregVerdict *verdict_out,
                                     char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PIREG_H */
