/* C interface to the zalcman library: bounds, reduction surfaces, critical
 * points, brute-force oracles and the verification suite for the generalized
 * Zalcman coefficient functional lambda*a_n^2 - a_{2n-1} on close-to-convex
 * functions.
 *
 * Conventions: every fallible call returns a zal_status; results travel
 * through out-parameters. The verification report is an opaque handle with
 * accessor functions and must be released with zal_report_free. Strings
 * returned as const char* are owned by the library (or the report handle)
 * and stay valid until the owning object is freed.
 */
#ifndef ZALCMAN_H
#define ZALCMAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zal_status {
  ZAL_OK = 0,
  ZAL_ERR_DOMAIN = 1,   /* n < 3, lambda <= 0, point off the square, s == t */
  ZAL_ERR_WINDOW = 2,   /* lambda outside the operation's stated window */
  ZAL_ERR_ARGUMENT = 3, /* null pointer, bad grid, bad range */
  ZAL_ERR_INTERNAL = 4
} zal_status;

typedef enum zal_regime {
  ZAL_REGIME_SMALL = 0,
  ZAL_REGIME_MIDDLE = 1,
  ZAL_REGIME_LARGE = 2
} zal_regime;

const char* zal_status_name(zal_status status);
/* Human-readable detail for the most recent failure on this thread. */
const char* zal_last_error(void);
const char* zal_version(void);

/* ---- thresholds, regimes, the bound ---------------------------------- */

typedef struct zal_thresholds {
  double lambda_small_max; /* 2n/(n^2-n+1) */
  double lambda_large_min; /* (3n+sqrt(5n^2-4n))/(n^2+n) */
  double aux_a;            /* (10n-2)/(n+1)^2 */
  double aux_b_nminus;     /* 2/(n-1) */
  double aux_b_nplus;      /* 2/(n+1) */
  double aux_b;            /* 2/n */
  double t_6n2;            /* (6n-2)/(n^2+n) */
  double t_5n1;            /* (5n-1)/(n^2+n) */
  double t_4n2;            /* (4n-2)/n^2 */
  double t_8n;             /* 8n/(n+1)^2 */
  double t_small_mirror;   /* (3n-sqrt(5n^2-4n))/(n^2+n) */
} zal_thresholds;

zal_status zal_compute_thresholds(int n, zal_thresholds* out);
zal_status zal_classify(int n, double lambda, zal_regime* out);
const char* zal_regime_name(zal_regime regime);
zal_status zal_theorem_bound(int n, double lambda, double* out);
/* Strict ordering of all thresholds; *passed gets 0/1, *margin the smallest gap. */
zal_status zal_check_chain(int n, int* passed, double* margin);

/* ---- extreme points and the functional ------------------------------- */

zal_status zal_extreme_coeff(double s, double t, int k, double* re, double* im);

typedef struct zal_functional_value {
  double z_re, z_im; /* lambda*a_n^2 - a_{2n-1} */
  double z_modulus;
  double j_value; /* lambda*(Re a_n)^2 - Re a_{2n-1} */
} zal_functional_value;

zal_status zal_functional_at(int n, double lambda, double s, double t,
                             zal_functional_value* out);

typedef struct zal_sweep_result {
  double max_value; /* max of J over the sampled extreme points */
  double s, t;      /* argmax, wrapped into [0, 2*pi) */
} zal_sweep_result;

zal_status zal_sweep_extreme_points(int n, double lambda, int grid,
                                    zal_sweep_result* out);

/* ---- surfaces --------------------------------------------------------- */

zal_status zal_eval_surface_f(int n, double lambda, double u, double v, double* out);
zal_status zal_eval_surface_g(int n, double lambda, double u, double v, double* out);
zal_status zal_gradient_f(int n, double lambda, double u, double v, double* du,
                          double* dv);
zal_status zal_discriminant(int n, double lambda, double* out);
zal_status zal_cubic_a(int n, double lambda, double* expanded, double* factored);
zal_status zal_boundary_max_f(int n, double lambda, double* out);
zal_status zal_interior_critical_value(int n, double lambda, double* out);

typedef struct zal_critical_point {
  double u, v;
  double f_value;
  double gradient_residual;
  int is_interior_pair; /* 0 for the origin */
} zal_critical_point;

/* Fills up to capacity points (3 suffice), sets *count to the number present
 * and copies a short note into note_buf when given. */
zal_status zal_critical_points(int n, double lambda, zal_critical_point* out,
                               int capacity, int* count, char* note_buf,
                               size_t note_cap);

typedef struct zal_edge_restriction {
  char label[8];  /* "Psi", "Phi", "psi", "phi" */
  double c2, c1, c0;
  double stationary;
  int stationary_interior;
  double max_value;
  double argmax;
} zal_edge_restriction;

/* The four one-dimensional boundary restrictions: F(1,v), F(u,1), G(1,v),
 * G(u,1), in that order. out must hold 4 entries. */
zal_status zal_boundary_restrictions(int n, double lambda,
                                     zal_edge_restriction* out);

/* ---- brute-force oracles ---------------------------------------------- */

typedef struct zal_max_result {
  double value;
  double x, y; /* y unused for edge maxima */
  double certified_gap;
} zal_max_result;

zal_status zal_grid_max_f(int n, double lambda, int resolution, int rounds,
                          double zoom, zal_max_result* out);
zal_status zal_grid_max_g(int n, double lambda, int resolution, int rounds,
                          double zoom, zal_max_result* out);

typedef enum zal_edge {
  ZAL_EDGE_U_PLUS = 0,  /* u = +1, free v */
  ZAL_EDGE_U_MINUS = 1, /* u = -1, free v */
  ZAL_EDGE_V_PLUS = 2,  /* v = +1, free u */
  ZAL_EDGE_V_MINUS = 3  /* v = -1, free u */
} zal_edge;

zal_status zal_edge_max_f(int n, double lambda, zal_edge edge, int resolution,
                          int rounds, double zoom, zal_max_result* out);
zal_status zal_edge_max_g(int n, double lambda, zal_edge edge, int resolution,
                          int rounds, double zoom, zal_max_result* out);

/* ---- verification ------------------------------------------------------ */

typedef struct zal_verify_config {
  int n_min;
  int n_max;
  int lambda_samples; /* per regime; 0 yields an empty report */
  int grid;
  uint64_t seed;
} zal_verify_config;

/* Default configuration: n in [3,10], 15 samples per regime, grid 512,
 * seed 20260808. */
void zal_verify_config_default(zal_verify_config* out);

typedef struct zal_verify_report zal_verify_report; /* opaque */

zal_status zal_verify_run(const zal_verify_config* config, zal_verify_report** out);
void zal_report_free(zal_verify_report* report);

int zal_report_record_count(const zal_verify_report* report);
int zal_report_failure_count(const zal_verify_report* report);

typedef struct zal_check_record {
  char check_id[48];
  int n;         /* 0 when not applicable */
  double lambda; /* NaN when not applicable */
  int passed;
  double margin;
} zal_check_record;

zal_status zal_report_record(const zal_verify_report* report, int index,
                             zal_check_record* out);
int zal_report_detail_count(const zal_verify_report* report, int index);
zal_status zal_report_detail(const zal_verify_report* report, int index,
                             int detail_index, const char** key, double* value);
int zal_report_flag_count(const zal_verify_report* report);
const char* zal_report_flag(const zal_verify_report* report, int index);
/* One line per record: check_id=<id> n=<n> lambda=<float> passed=<bool>
 * margin=<float>. Owned by the report. */
const char* zal_report_text(const zal_verify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZALCMAN_H */
