/* Public C API of the gyrogroup verification library.
 *
 * All functions return gyro_status; GYRO_OK means success. On failure the
 * optional errmsg out-parameter (when non-NULL) receives a heap-allocated
 * description that the caller releases with gyro_string_free(). Handles are
 * opaque; every gyro_* object is released with its matching _free function.
 * Objects are immutable after creation and may be shared across threads.
 */
#ifndef GYRO_GYRO_H
#define GYRO_GYRO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gyro_status {
  GYRO_OK = 0,
  GYRO_ERROR_INVALID_ARGUMENT = 1,
  GYRO_ERROR_PARSE = 2,
  GYRO_ERROR_INDEX_OUT_OF_RANGE = 3,
  GYRO_ERROR_RESOURCE_LIMIT = 4,
  GYRO_ERROR_NOT_A_GROUP = 5,
  GYRO_ERROR_NOT_A_SUBGYROGROUP = 6,
  GYRO_ERROR_NOT_AN_L_SUBGYROGROUP = 7,
  GYRO_ERROR_PRECONDITION_UNMET = 8,
  GYRO_ERROR_PARENT_MISMATCH = 9,
  GYRO_ERROR_OUTSIDE_BALL = 10,
  GYRO_ERROR_MISMATCHED_C = 11,
  GYRO_ERROR_TOLERANCE_NOT_POSITIVE = 12,
  GYRO_ERROR_PARTITION_FAILURE = 13,
  GYRO_ERROR_EMPTY_SUBSET = 14,
  GYRO_ERROR_IO = 15,
  GYRO_ERROR_INTERNAL = 16
} gyro_status;

const char* gyro_status_name(gyro_status status);

void gyro_string_free(char* s);

/* ---- finite gyrogroup tables ------------------------------------------- */

typedef struct gyro_table_s gyro_table;

/* Parses and fully verifies a table file / buffer; fails with a first-
 * failure description when the table is not a gyrogroup. `limit` bounds the
 * carrier size (pass 0 for the built-in default of 4096). */
gyro_status gyro_table_load(const char* path, int64_t limit, gyro_table** out,
                            char** errmsg);
gyro_status gyro_table_parse(const char* text, int64_t limit, gyro_table** out,
                             char** errmsg);
void gyro_table_free(gyro_table* t);

int32_t gyro_table_order(const gyro_table* t);
int32_t gyro_table_identity(const gyro_table* t);
/* Element operations return -1 when an index is out of range. */
int32_t gyro_table_add(const gyro_table* t, int32_t a, int32_t b);
int32_t gyro_table_neg(const gyro_table* t, int32_t a);
int32_t gyro_table_gyr(const gyro_table* t, int32_t a, int32_t b, int32_t c);
int32_t gyro_table_coadd(const gyro_table* t, int32_t a, int32_t b);
/* Number of distinct gyration permutations (1 means the table is a group). */
int32_t gyro_table_gyration_count(const gyro_table* t);

/* ---- Einstein ball ------------------------------------------------------ */

/* Velocities are double[3]; c is the ball radius. All operands must lie
 * strictly inside the ball and share the same c. */
gyro_status gyro_einstein_gamma(const double u[3], double c, double* out,
                                char** errmsg);
gyro_status gyro_einstein_add(const double u[3], const double v[3], double c,
                              double out[3], char** errmsg);
gyro_status gyro_einstein_gyr(const double u[3], const double v[3],
                              const double w[3], double c, double out[3],
                              char** errmsg);
gyro_status gyro_einstein_coadd(const double u[3], const double v[3], double c,
                                double out[3], char** errmsg);

/* ---- command-level runs ------------------------------------------------- */

typedef struct gyro_report_s gyro_report;

typedef enum gyro_format {
  GYRO_FORMAT_HUMAN = 0,
  GYRO_FORMAT_STRUCTURED = 1
} gyro_format;

/* Table axiom verification (plus the exhaustive derived-identity suite for
 * small carriers). */
gyro_status gyro_run_verify(const char* path, int64_t limit, gyro_report** out,
                            char** errmsg);

/* Subgyrogroup enumeration and classification. */
gyro_status gyro_run_subgyro(const char* path, int64_t limit,
                             gyro_report** out, char** errmsg);

/* Left-coset partition for the subgyrogroup given as a comma-separated index
 * list, e.g. "0,2". With diagnostic != 0 the raw coset family and its
 * overlaps are reported instead (works for non-L subgyrogroups). */
gyro_status gyro_run_cosets(const char* path, const char* subset,
                            int diagnostic, int64_t limit, gyro_report** out,
                            char** errmsg);

typedef struct gyro_einstein_params {
  double c;         /* ball radius, > 0 */
  double tol;       /* identity-check tolerance, > 0 */
  double max_beta;  /* sampling speed cap as a fraction of c, in (0,1) */
  int64_t samples;  /* sampled (a,b,c,d) tuples */
  uint64_t seed;    /* sampler seed */
} gyro_einstein_params;

/* Seeded identity suite over the Einstein ball, run for both forms of the
 * quadratic-term gamma factor; the report records which form satisfies the
 * axioms. */
gyro_status gyro_run_einstein(const gyro_einstein_params* params,
                              gyro_report** out, char** errmsg);

typedef struct gyro_setcheck_params {
  const char* check;  /* assoc | inverse-bound | neutrality | double-chain |
                         coadd-chain | scan */
  const char* set_w;  /* subset literals; NULL when not supplied */
  const char* set_u;
  const char* set_v;
  const char* set_h;
  int32_t g_elem;     /* element for coadd-chain; -1 when not supplied */
  int force;          /* run assoc even if V is not gyr-invariant */
  int32_t scan_limit; /* max carrier size for scan; 0 for default (6) */
} gyro_setcheck_params;

/* Subset-algebra checks over a table. */
gyro_status gyro_run_setcheck(const char* path,
                              const gyro_setcheck_params* params,
                              int64_t limit, gyro_report** out, char** errmsg);

/* ---- reports ------------------------------------------------------------ */

/* 1 when every verdict in the report holds. */
int gyro_report_all_passed(const gyro_report* report);
/* Renders the report; structured output is a deterministic function of
 * (input bytes, parameters, seed). */
gyro_status gyro_report_render(const gyro_report* report, gyro_format format,
                               char** out);
void gyro_report_free(gyro_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GYRO_GYRO_H */
