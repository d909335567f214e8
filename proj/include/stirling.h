/* stirling.h -- C interface to the Stirling-coefficient / gamma-asymptotics
 * library.
 *
 * Conventions:
 *   - Every fallible function returns a stirling_status; outputs are written
 *     through pointers only on STIRLING_OK.
 *   - On any non-OK status, stirling_last_error() returns a thread-local
 *     human-readable message (valid until the next failing call on the same
 *     thread).
 *   - Exact rational values cross the boundary as decimal strings
 *     ("-571/2488320"); strings returned through char** are heap-allocated
 *     and released with stirling_string_free.  Strings returned as
 *     const char* from a handle are owned by that handle.
 *   - Opaque handles are created and freed by their matching functions;
 *     accessors never take ownership.
 */

#ifndef STIRLING_H
#define STIRLING_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---------------------------------------------------------------- status */

typedef enum stirling_status {
  STIRLING_OK = 0,
  STIRLING_ERR_USAGE = 1,     /* bad arguments / order too low */
  STIRLING_ERR_DOMAIN = 2,    /* mathematically out of domain */
  STIRLING_ERR_ACCURACY = 3,  /* refinement cap hit before tolerance */
  STIRLING_ERR_CONTOUR = 4,   /* contour failed a preflight check */
  STIRLING_ERR_INTEGRITY = 5, /* independent exact methods disagreed */
  STIRLING_ERR_INTERNAL = 6   /* unexpected failure */
} stirling_status;

/* Thread-local message for the most recent failure on this thread; never
 * NULL (empty string when no failure has occurred). */
const char* stirling_last_error(void);

/* Library version, "major.minor.patch". Static storage; do not free. */
const char* stirling_version(void);

/* Releases a string returned through a char** out-parameter. */
void stirling_string_free(char* s);

/* ------------------------------------------------- Stirling coefficients */

/* Method bitmask, one bit per independent derivation. */
#define STIRLING_METHOD_SERIES (1u << 0)
#define STIRLING_METHOD_RECURRENCE (1u << 1)
#define STIRLING_METHOD_PARTITION (1u << 2)
#define STIRLING_METHOD_PARTITION_ALT (1u << 3)
#define STIRLING_METHOD_ASSOC3 (1u << 4)
#define STIRLING_METHOD_FIRST_KIND (1u << 5)
#define STIRLING_METHOD_LAMBDA (1u << 6)
#define STIRLING_METHODS_ALL 0x7Fu

/* gamma_n by one named method ("series", "recurrence", "partition",
 * "partition_alt", "assoc3", "first_kind", "lambda"); *value_out receives
 * the exact rational as a string. */
stirling_status stirling_gamma_coefficient(int n, const char* method,
                                           char** value_out);

/* Cross-checked table of gamma_0..gamma_n_max for every method in the
 * mask.  Creation fails with STIRLING_ERR_INTEGRITY if any two methods
 * disagree (they never should). Rows are ordered by n, then by method in
 * the bit order above. */
typedef struct stirling_coeff_table stirling_coeff_table;

stirling_status stirling_coeff_table_create(int n_max, unsigned methods_mask,
                                            stirling_coeff_table** out);
size_t stirling_coeff_table_rows(const stirling_coeff_table* table);
/* Any out-pointer may be NULL.  Returned strings are owned by the table. */
stirling_status stirling_coeff_table_row(const stirling_coeff_table* table,
                                         size_t row, int* n_out,
                                         const char** method_out,
                                         const char** value_out);
void stirling_coeff_table_free(stirling_coeff_table* table);

/* ------------------------------------------------------ gamma references */

/* Gamma(x) by the Euler integral; 0 < x <= 171.6 (overflow otherwise). */
stirling_status stirling_gamma(double x, double* out);

/* Gamma*(x) = Gamma(x) / (sqrt(2 pi) x^{x-1/2} e^{-x}) by its saddle
 * integral; any x > 0, no overflow. */
stirling_status stirling_gamma_star(double x, double* out);

/* ------------------------------------------------- expansion + remainder */

typedef struct stirling_eval_result {
  double gamma_star;  /* Gamma*(x), saddle integral */
  double partial_sum; /* sum_{n=0}^{m-1} (-1)^n gamma_n x^{-n} */
  double remainder;   /* gamma_star - partial_sum */
} stirling_eval_result;

/* Evaluates the m-term Stirling expansion of Gamma*(x). m >= 0, x > 0. */
stirling_status stirling_eval(double x, int m, stirling_eval_result* out);

typedef struct stirling_quad_result {
  double value_re;
  double value_im;
  double error_estimate;
  uint64_t evaluations;
} stirling_quad_result;

/* R_m(x) by Gamma* minus the partial sum (the oracle route). m >= 0. */
stirling_status stirling_remainder_difference(int m, double x, double* out);

/* R_m(x) by a double-integral route: boyd = 0 selects the new
 * representation, boyd != 0 selects Boyd's.  m >= 1, x > 0.  The value is
 * real; value_im reports the (noise-level) imaginary leakage. */
stirling_status stirling_remainder_integral(int m, double x, int boyd,
                                            stirling_quad_result* out);

/* ------------------------------------------------- route cross-validation */

typedef struct stirling_pair {
  int m;
  double x;
} stirling_pair;

typedef struct stirling_verify_row {
  int m;
  double x;
  double r_difference;
  double r_new;
  double r_boyd;
  /* max pairwise |a-b| over the three routes, relative to the largest
   * magnitude route value */
  double max_pairwise_delta;
  int passed; /* 1 if max_pairwise_delta <= tol */
} stirling_verify_row;

typedef struct stirling_verify_report stirling_verify_report;

/* Runs all three remainder routes for every pair; per-pair failures are
 * recorded in the row (passed = 0, values NaN) and the batch continues. */
stirling_status stirling_verify(const stirling_pair* pairs, size_t n_pairs,
                                double tol, stirling_verify_report** out);
size_t stirling_verify_report_rows(const stirling_verify_report* report);
stirling_status stirling_verify_report_row(const stirling_verify_report* rep,
                                           size_t row,
                                           stirling_verify_row* out);
/* Row's failure/ok message; owned by the report. */
const char* stirling_verify_report_message(const stirling_verify_report* rep,
                                           size_t row);
int stirling_verify_report_all_passed(const stirling_verify_report* report);
void stirling_verify_report_free(stirling_verify_report* report);

/* ------------------------------------------------------ Lagrange inversion */

/* Exact inversion coefficient a_n (1 <= n <= m) of t = u phi(t) for the
 * saddle map phi = g^{-1/2}, built from a series of order m. */
stirling_status stirling_inversion_coefficient(int m, int n, char** value_out);

/* Exact coefficient c_m of the correction term c_m u^m. */
stirling_status stirling_correction_coefficient(int m, char** value_out);

typedef struct stirling_inversion_result {
  double series_value;          /* sum_{n=1}^m a_n u^n */
  double correction;            /* c_m u^m */
  double remainder_re;          /* Q_m(u), contour integral */
  double remainder_im;
  double remainder_error;
  uint64_t remainder_evaluations;
  double newton_t;              /* independent root of h(t) = u^2/2 */
  double defect;                /* |series + correction + Q_m - newton_t| */
} stirling_inversion_result;

/* Reconstructs t(u) as series + correction + Q_m(u) on the default
 * contour and compares with the Newton root. m >= 1, u finite. */
stirling_status stirling_invert(double u, int m,
                                stirling_inversion_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STIRLING_H */
