#ifndef CHW_CHW_H
#define CHW_CHW_H

/* C interface to the workbench. Every entry point returns a chw_status;
 * on failure chw_last_error() describes the problem for the calling thread.
 * Strings returned through char** are freed with chw_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CHW_OK = 0,
  CHW_ERR_PARSE = 1,    /* malformed text or JSON input */
  CHW_ERR_DOMAIN = 2,   /* mathematically invalid request */
  CHW_ERR_ARGUMENT = 3, /* null pointer or out-of-range option */
  CHW_ERR_INTERNAL = 4
} chw_status;

const char* chw_last_error(void);
/* 1-based column of the last parse error, 0 when unknown. */
size_t chw_last_error_column(void);
void chw_string_free(char* s);

/* ------------------------------------------------------------ polynomials */

typedef struct chw_poly chw_poly;

/* Laurent polynomial in x1..xn with coefficients in Q(k). group is "gl" or "sl". */
chw_status chw_poly_parse(const char* text, int n, const char* group, chw_poly** out);
chw_status chw_poly_to_string(const chw_poly* p, char** out);
void chw_poly_free(chw_poly* p);

/* Applies the Dunkl-Cherednik operator T_y in the calibrated convention.
 * y holds n rational strings; kappa is "formal" or a rational. */
chw_status chw_dunkl_apply(const chw_poly* f, const char* const* y, int y_len, const char* kappa, chw_poly** out);

/* kappa = c / n, as a rational string. */
chw_status chw_kappa_from_c(const char* c, int n, char** out);

/* ---------------------------------------------------------------- reports */

typedef struct chw_report chw_report;

/* JSON document and human-readable table; both owned by the report. */
const char* chw_report_json(const chw_report* r);
const char* chw_report_text(const chw_report* r);
/* 1 when every check in the report passed. */
int chw_report_pass(const chw_report* r);
void chw_report_free(chw_report* r);

/* Relation suites. group: "gl", "sl", "pgl" or "xi" (embedding into SL x D).
 * c may be NULL; when set, kappa is ignored, replaced by c/n and c is echoed. */
chw_status chw_check_relations(const char* group, int n, const char* kappa, const char* c, chw_report** out);
chw_status chw_check_commutativity(int n, const char* kappa, const char* c, chw_report** out);

/* Geometry. model: "additive" or "trig". */
chw_status chw_orbit_census(int n, int samples, uint64_t seed, int conjugations, chw_report** out);
chw_status chw_freeness_suite(int max_n, int samples, uint64_t seed, chw_report** out);
chw_status chw_nilcone_suite(const char* model, int n, int samples, uint64_t seed, chw_report** out);
/* Moment, nil-cone membership and nil-flag search for one quadruple (JSON). */
chw_status chw_nilcone_point(const char* quadruple_json, chw_report** out);
chw_status chw_semiinv_suite(int n, int samples, int conjugations, uint64_t seed, chw_report** out);
/* Krylov matrix and f for X = x and v = i of a quadruple (JSON). */
chw_status chw_semiinv_point(const char* quadruple_json, chw_report** out);
chw_status chw_diffderiv_suite(int n, int samples, int max_degree, uint64_t seed, chw_report** out);
/* Df(L_X, R_X)(Y) for a polynomial f in t, X = x and Y = y of a quadruple (JSON). */
chw_status chw_diffderiv_point(const char* f, const char* quadruple_json, chw_report** out);
chw_status chw_epsilon_suite(const char* model, int n, int samples, uint64_t seed, chw_report** out);
/* points: "c1:d1,c2:d2,..." */
chw_status chw_epsilon_points(const char* model, const char* points, chw_report** out);

/* Springer smallness report and Galois counts for 1 <= m <= n. */
chw_status chw_springer(int n, int m, chw_report** out);

#ifdef __cplusplus
}
#endif

#endif /* CHW_CHW_H */
