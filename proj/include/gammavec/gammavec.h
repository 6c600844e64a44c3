/*
 * gammavec C API.
 *
 * Every object crossing this boundary is an opaque handle owned by the caller
 * and released with the matching *_free function. Functions return a
 * gv_status; on failure gv_last_error() describes the problem for the calling
 * thread. Big integers are exchanged as decimal strings. A `const char*`
 * returned by an accessor stays valid until its handle is freed.
 */
#ifndef GAMMAVEC_GAMMAVEC_H
#define GAMMAVEC_GAMMAVEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GV_API __declspec(dllexport)
#else
#define GV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gv_status {
  GV_OK = 0,
  GV_END = 1, /* stream exhausted; not an error */
  GV_ERR_INVALID_ARGUMENT = 2,
  GV_ERR_PARSE = 3,
  GV_ERR_OUT_OF_RANGE = 4,
  GV_ERR_BUFFER_TOO_SMALL = 5,
  GV_ERR_INTERNAL = 6
} gv_status;

typedef enum gv_family { GV_FAMILY_QFACT = 0, GV_FAMILY_DISTINCT = 1, GV_FAMILY_QBINOM = 2 } gv_family;

typedef enum gv_kind { GV_KIND_G = 0, GV_KIND_GAMMA = 1 } gv_kind;

typedef enum gv_provenance {
  GV_PROVENANCE_POLY = 0,
  GV_PROVENANCE_RECURRENCE = 1,
  GV_PROVENANCE_FIXEDPOINT = 2,
  GV_PROVENANCE_ALTSUM = 3
} gv_provenance;

typedef enum gv_enum_kind {
  GV_ENUM_BALLOT = 0,          /* params: length, norths */
  GV_ENUM_PATH_MATCHINGS = 1,  /* params: n */
  GV_ENUM_CYCLE_MATCHINGS = 2, /* params: n */
  GV_ENUM_LUCANOMIAL = 3,      /* params: n, k */
  GV_ENUM_FIXED_POINTS = 4,    /* params: n, i */
  GV_ENUM_DECORATED = 5        /* params: n, i */
} gv_enum_kind;

typedef struct gv_poly gv_poly;
typedef struct gv_symvec gv_symvec;
typedef struct gv_table gv_table;
typedef struct gv_report gv_report;
typedef struct gv_stream gv_stream;

GV_API const char* gv_version(void);
GV_API const char* gv_status_string(gv_status status);
/* Message for the last failing call on this thread; "" if none. */
GV_API const char* gv_last_error(void);

/* Polynomials --------------------------------------------------------------- */

/* k is ignored except for GV_FAMILY_QBINOM. */
GV_API gv_status gv_poly_family(gv_family family, unsigned n, unsigned k, gv_poly** out);
/* coeffs[i] is the decimal coefficient of q^i. */
GV_API gv_status gv_poly_from_decimal(const char* const* coeffs, size_t count, gv_poly** out);
GV_API void gv_poly_free(gv_poly* poly);
/* Number of stored coefficients (degree + 1; 0 for the zero polynomial). */
GV_API size_t gv_poly_length(const gv_poly* poly);
GV_API gv_status gv_poly_coeff(const gv_poly* poly, size_t i, const char** out);
/* *is_palindromic is 0 when h is not palindromic, and *degree is then left untouched. */
GV_API gv_status gv_poly_palindromic_degree(const gv_poly* poly, int* is_palindromic,
                                            size_t* degree);
GV_API gv_status gv_poly_is_unimodal(const gv_poly* poly, int* out);
GV_API gv_status gv_poly_g_vector(const gv_poly* poly, gv_symvec** out);
GV_API gv_status gv_poly_gamma_vector(const gv_poly* poly, gv_symvec** out);

/* g- and gamma-vectors ------------------------------------------------------ */

GV_API gv_status gv_symvec_create(gv_kind kind, size_t degree, size_t shift,
                                  const char* const* entries, size_t count, gv_symvec** out);
GV_API void gv_symvec_free(gv_symvec* vec);
GV_API gv_kind gv_symvec_kind(const gv_symvec* vec);
GV_API size_t gv_symvec_degree(const gv_symvec* vec);
GV_API size_t gv_symvec_shift(const gv_symvec* vec);
GV_API size_t gv_symvec_size(const gv_symvec* vec);
GV_API gv_status gv_symvec_entry(const gv_symvec* vec, size_t i, const char** out);
/* from_g / from_gamma according to the vector's kind. */
GV_API gv_status gv_symvec_to_poly(const gv_symvec* vec, gv_poly** out);
GV_API gv_status gv_symvec_g_from_gamma(const gv_symvec* gamma, gv_symvec** out);
/* sum_i gamma_i z^i as a decimal string, owned by the vector. */
GV_API gv_status gv_symvec_gamma_eval(gv_symvec* gamma, long z, const char** out);

/* g-table of [n]! ------------------------------------------------------------ */

GV_API gv_status gv_table_compute(unsigned n_max, gv_provenance provenance, gv_table** out);
GV_API void gv_table_free(gv_table* table);
GV_API size_t gv_table_rows(const gv_table* table);
/* Row r (0-based) holds n = r + 1. */
GV_API size_t gv_table_row_length(const gv_table* table, size_t row);
GV_API gv_status gv_table_entry(const gv_table* table, size_t row, size_t i, const char** out);

/* Verification -------------------------------------------------------------- */

typedef struct gv_verify_options {
  unsigned fixed_point_limit; /* 0 selects the default of 8 */
  int corrupt_basis;          /* nonzero: add corrupt_delta to B_d(i, j) */
  size_t corrupt_degree;
  size_t corrupt_i;
  size_t corrupt_j;
  long corrupt_delta;
} gv_verify_options;

/* options may be NULL. */
GV_API gv_status gv_verify(unsigned n_max, const gv_verify_options* options, gv_report** out);
GV_API void gv_report_free(gv_report* report);
GV_API size_t gv_report_count(const gv_report* report);
GV_API int gv_report_all_passed(const gv_report* report);
GV_API const char* gv_report_name(const gv_report* report, size_t idx);
GV_API int gv_report_passed(const gv_report* report, size_t idx);
/* NULL when the check passed. */
GV_API const char* gv_report_witness(const gv_report* report, size_t idx);
GV_API size_t gv_report_param_count(const gv_report* report, size_t idx);
GV_API const char* gv_report_param_key(const gv_report* report, size_t idx, size_t p);
GV_API const char* gv_report_param_value(const gv_report* report, size_t idx, size_t p);

/* Enumeration --------------------------------------------------------------- */

GV_API gv_status gv_stream_open(gv_enum_kind kind, const unsigned* params, size_t param_count,
                                gv_stream** out);
/* Sets *item to the canonical text of the next object and returns GV_OK, or
 * returns GV_END when exhausted. *item is valid until the next call. */
GV_API gv_status gv_stream_next(gv_stream* stream, const char** item);
GV_API void gv_stream_free(gv_stream* stream);

/* Decorated ballot paths ---------------------------------------------------- */

/* Writes the NUL-terminated image of `path` under the sign-reversing
 * involution into buf. *needed receives the required size including the NUL;
 * GV_ERR_BUFFER_TOO_SMALL if buflen is short. */
GV_API gv_status gv_decorated_involution(const char* path, char* buf, size_t buflen,
                                         size_t* needed);
GV_API gv_status gv_decorated_active_valleys(const char* path, size_t* count);
GV_API gv_status gv_decorated_decorated_count(const char* path, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* GAMMAVEC_GAMMAVEC_H */
