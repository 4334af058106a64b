#ifndef NCGRASS_H
#define NCGRASS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum NcgStatus {
  NCG_STATUS_OK = 0,
  NCG_STATUS_NULL_POINTER = 1,
  NCG_STATUS_INVALID_ARGUMENT = 2,
  // The requested quasideterminant (or coordinate) does not exist.
  NCG_STATUS_UNDEFINED = 3,
  NCG_STATUS_SINGULAR = 4,
  NCG_STATUS_CONFIG = 5,
  NCG_STATUS_INTERNAL = 6,
} NcgStatus;

// Quasideterminant evaluation route.
typedef enum NcgMethod {
  NCG_METHOD_RECURSIVE = 0,
  NCG_METHOD_BORDER = 1,
} NcgMethod;

// Dense matrix of rational quaternions.
typedef struct NcgQuatMatrix NcgQuatMatrix;

// Finished verification run.
typedef struct NcgReport NcgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *ncg_version(void);

// Copy of the last error message on this thread, or NULL when the last
// call succeeded. Free with `ncg_string_free`.
char *ncg_last_error(void);

// Releases a string produced by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void ncg_string_free(char *s);

// New `rows × cols` zero matrix.
//
// # Safety
// `out` must be valid for writing a pointer.
enum NcgStatus ncg_quat_matrix_new(size_t rows, size_t cols, struct NcgQuatMatrix **out);

// Matrix with integer quaternion entries in `-9..=9`, reproducible from
// `seed`.
//
// # Safety
// `out` must be valid for writing a pointer.
enum NcgStatus ncg_quat_matrix_random(size_t rows,
                                      size_t cols,
                                      uint64_t seed,
                                      struct NcgQuatMatrix **out);

// # Safety
// `m` must be NULL or a live handle from this library.
void ncg_quat_matrix_free(struct NcgQuatMatrix *m);

// Sets entry `(i, j)` to `(num[0] + num[1] i + num[2] j + num[3] k) / den`.
//
// # Safety
// `m` must be a live handle and `num` must point to four integers.
enum NcgStatus ncg_quat_matrix_set(struct NcgQuatMatrix *m,
                                   size_t i,
                                   size_t j,
                                   const int64_t *num,
                                   int64_t den);

// Entry `(i, j)` rendered as `(a + bi + cj + dk)` with exact rationals.
//
// # Safety
// `m` must be a live handle; `out` must be valid for writing a pointer.
enum NcgStatus ncg_quat_matrix_get(const struct NcgQuatMatrix *m, size_t i, size_t j, char **out);

// Quasideterminant `|A|_{ij}` of a square matrix, rendered like
// `ncg_quat_matrix_get`.
//
// # Safety
// `m` must be a live handle; `out` must be valid for writing a pointer.
enum NcgStatus ncg_quasidet(const struct NcgQuatMatrix *m,
                            size_t i,
                            size_t j,
                            enum NcgMethod method,
                            char **out);

// Evaluates `Σ_{j∈L} r_{ij}^{L∖j} r_{ji}^M` on an `n × d` matrix, with
// `|L| = d` and `|M| = d - 1`, and stores whether it equals 1.
//
// # Safety
// `m` must be a live handle, `l` and `mset` must point to `l_len` and
// `m_len` indices, and `is_one` must be writable.
enum NcgStatus ncg_qp_relation(const struct NcgQuatMatrix *m,
                               size_t i,
                               const size_t *l,
                               size_t l_len,
                               const size_t *mset,
                               size_t m_len,
                               bool *is_one);

// Quantum minor over `rows` and `cols` of an `n × n` generic matrix, in
// normal form.
//
// # Safety
// `rows` and `cols` must point to `len` indices; `out` must be writable.
enum NcgStatus ncg_qdet(size_t n, const size_t *rows, const size_t *cols, size_t len, char **out);

// Runs the verification suites. `config_toml` uses the same keys as the
// command-line config file and may be NULL for defaults.
//
// # Safety
// `config_toml` must be NULL or a NUL-terminated string; `out` writable.
enum NcgStatus ncg_run(const char *config_toml, struct NcgReport **out);

// Number of failed checks.
//
// # Safety
// `r` must be NULL or a live handle.
size_t ncg_report_failures(const struct NcgReport *r);

// Number of checks of any status.
//
// # Safety
// `r` must be NULL or a live handle.
size_t ncg_report_total(const struct NcgReport *r);

// The report as JSON (the same bytes the command line prints).
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum NcgStatus ncg_report_json(const struct NcgReport *r, char **out);

// # Safety
// `r` must be NULL or a live handle from this library.
void ncg_report_free(struct NcgReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCGRASS_H */
