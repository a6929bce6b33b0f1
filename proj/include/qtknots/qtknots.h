#ifndef QTKNOTS_QTKNOTS_H
#define QTKNOTS_QTKNOTS_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(QTKNOTS_BUILDING)
#define QTK_API __declspec(dllexport)
#else
#define QTK_API __declspec(dllimport)
#endif
#else
#define QTK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Every fallible call returns a qtk_status. On failure a message is
 * available from qtk_last_error() on the calling thread until the next call.
 * Strings returned through char** are owned by the caller and must be
 * released with qtk_string_free. Handles are released with their _free
 * function; passing NULL to any _free is a no-op.
 */
typedef enum qtk_status {
  QTK_OK = 0,
  QTK_EINVAL = 2,     /* malformed input */
  QTK_EVERIFY = 3,    /* a requested check did not hold */
  QTK_EINTERNAL = 4,  /* internal arithmetic inconsistency */
  QTK_EDIVZERO = 5,   /* division by zero during evaluation */
  QTK_ELIMIT = 6,     /* degree guard exceeded */
  QTK_ENOMEM = 7
} qtk_status;

typedef enum qtk_format {
  QTK_FORMAT_TEXT = 0,
  QTK_FORMAT_JSON = 1,
  QTK_FORMAT_SCHUR = 2 /* superpolynomials and D_tau: Schur-(q,t) text */
} qtk_format;

typedef struct qtk_symfunc qtk_symfunc;
typedef struct qtk_superpoly qtk_superpoly;
typedef struct qtk_report qtk_report;

QTK_API const char* qtk_version(void);
QTK_API const char* qtk_last_error(void);
QTK_API void qtk_string_free(char* s);

/* Global configuration. */
QTK_API void qtk_set_max_degree(int degree);
QTK_API int qtk_max_degree(void);
/* NULL restores the default location; "" disables the disk cache. */
QTK_API qtk_status qtk_set_cache_dir(const char* path);
QTK_API qtk_status qtk_cache_dir(char** out);

/* Symmetric functions: "e[4]", "h[2,2]", "s[3,1]", "p[2]+q*s[1,1]". */
QTK_API qtk_status qtk_symfunc_parse(const char* text, qtk_symfunc** out);
QTK_API qtk_status qtk_symfunc_from_json(const char* json, qtk_symfunc** out);
QTK_API qtk_status qtk_symfunc_render(const qtk_symfunc* f, qtk_format format, char** out);
QTK_API int qtk_symfunc_equal(const qtk_symfunc* a, const qtk_symfunc* b);
QTK_API void qtk_symfunc_free(qtk_symfunc* f);

/* Modified Macdonald polynomial H~_mu, mu as "3,1". */
QTK_API qtk_status qtk_macdonald(const char* mu, qtk_symfunc** out);
/* Kostka matrix of size n; classical != 0 selects t^{n(lambda)} K~(q,1/t). */
QTK_API qtk_status qtk_kostka(int n, int classical, qtk_format format, char** out);
/* nabla^power, power in {1, -1}. */
QTK_API qtk_status qtk_nabla(const qtk_symfunc* f, int power, qtk_symfunc** out);
/* X^(k,n) applied to f. */
QTK_API qtk_status qtk_hall_apply(int k, int n, const qtk_symfunc* f, qtk_symfunc** out);
/* Family member f_(k,n) from a seed such as "e2", "pi3", "shat2,1". The seed
 * degree d must divide k and n with gcd(k/d, n/d) = 1. */
QTK_API qtk_status qtk_hall_create(const char* seed, int k, int n, qtk_symfunc** out);

/* Superpolynomials. */
QTK_API qtk_status qtk_superpoly_compute(int k, int n, qtk_superpoly** out);
/* Accepts either text format or the JSON form. */
QTK_API qtk_status qtk_superpoly_parse(const char* text, qtk_superpoly** out);
QTK_API qtk_status qtk_superpoly_render(const qtk_superpoly* p, qtk_format format, char** out);
QTK_API int qtk_superpoly_equal(const qtk_superpoly* a, const qtk_superpoly* b);
QTK_API size_t qtk_superpoly_length(const qtk_superpoly* p);
QTK_API void qtk_superpoly_free(qtk_superpoly* p);

/* Triangular partitions of size 0..max. Text: "1 1 2 ..." or one line per size. */
QTK_API qtk_status qtk_triangular_count(int max, qtk_format format, char** out);
QTK_API qtk_status qtk_triangular_list(int max, qtk_format format, char** out);
/* D_tau(q,t) as monomial text, Schur-(q,t) text or JSON. */
QTK_API qtk_status qtk_dtau(const char* tau, qtk_format format, char** out);
/* The A-graded refinement DD_tau. */
QTK_API qtk_status qtk_delta_comb(const char* tau, qtk_superpoly** out);

/* Checks a candidate A_kn; *pass receives 1 or 0. With hook_n > 0 the
 * hook-term factorization for that n is checked as well. */
QTK_API qtk_status qtk_check_a(const char* candidate, int k, int n, int hook_n, qtk_format format, int* pass,
                               char** out);

/* Verification suites. */
QTK_API qtk_status qtk_verify_suites(qtk_format format, char** out);
QTK_API qtk_status qtk_verify_run(const char* suite, int jobs, qtk_report** out);
QTK_API size_t qtk_report_size(const qtk_report* r);
/* Borrowed strings, valid until qtk_report_free. */
QTK_API const char* qtk_report_name(const qtk_report* r, size_t i);
QTK_API const char* qtk_report_detail(const qtk_report* r, size_t i);
QTK_API int qtk_report_pass(const qtk_report* r, size_t i);
QTK_API int qtk_report_gating(const qtk_report* r, size_t i);
QTK_API double qtk_report_seconds(const qtk_report* r, size_t i);
/* 1 when no gating check failed. */
QTK_API int qtk_report_ok(const qtk_report* r);
/* One machine-readable line per check, or a JSON array. */
QTK_API qtk_status qtk_report_render(const qtk_report* r, qtk_format format, char** out);
QTK_API void qtk_report_free(qtk_report* r);

/* Disk cache. */
QTK_API qtk_status qtk_cache_list(qtk_format format, char** out);
QTK_API qtk_status qtk_cache_clear(size_t* removed);

#ifdef __cplusplus
}
#endif

#endif
