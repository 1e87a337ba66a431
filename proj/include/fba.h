/* C interface to the forest bialgebra library.
 *
 * Every object is an opaque handle released with its matching *_free.
 * Functions return an fba_status; on failure fba_last_error() describes the
 * problem (per thread) and output pointers are left untouched. Strings
 * returned through char** belong to the caller and go to fba_string_free.
 */
#ifndef FBA_H
#define FBA_H

#include <stddef.h>

#if defined(FBA_BUILDING_LIBRARY)
#define FBA_API __attribute__((visibility("default")))
#else
#define FBA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fba_status {
  FBA_OK = 0,
  FBA_ERR_PARSE = 1,
  FBA_ERR_SYMBOL = 2,
  FBA_ERR_INVALID_ARGUMENT = 3,
  FBA_ERR_POLE = 4,
  FBA_ERR_UNKNOWN_SUITE = 5,
  FBA_ERR_INTERNAL = 6
} fba_status;

typedef struct fba_alphabet fba_alphabet;
typedef struct fba_forest fba_forest;
typedef struct fba_forest_list fba_forest_list;
/* A coefficient (arity 0) or a linear combination of forests, pairs or
 * triples of forests (arity 1, 2, 3). */
typedef struct fba_element fba_element;
typedef struct fba_report fba_report;

FBA_API const char* fba_last_error(void);
/* Byte offset of the last FBA_ERR_PARSE, or (size_t)-1. */
FBA_API size_t fba_last_error_position(void);
FBA_API void fba_string_free(char* s);

/* ---- alphabets and forests ---- */

/* Comma-separated symbol lists, e.g. ("a,b", "x"). Omega must be nonempty. */
FBA_API fba_status fba_alphabet_new(const char* omega, const char* xset, fba_alphabet** out);
FBA_API void fba_alphabet_free(fba_alphabet* a);

FBA_API fba_status fba_forest_parse(const fba_alphabet* a, const char* text, fba_forest** out);
FBA_API void fba_forest_free(fba_forest* f);
FBA_API fba_status fba_forest_render(const fba_forest* f, char** out);
FBA_API size_t fba_forest_nvertices(const fba_forest* f);
FBA_API size_t fba_forest_breadth(const fba_forest* f);
FBA_API size_t fba_forest_depth(const fba_forest* f);

/* Every forest with at most n_max vertices, by size then canonical text. */
FBA_API fba_status fba_enumerate(const fba_alphabet* a, size_t n_max, fba_forest_list** out);
FBA_API size_t fba_forest_list_size(const fba_forest_list* l);
/* Borrowed view; valid until the list is freed. */
FBA_API const fba_forest* fba_forest_list_get(const fba_forest_list* l, size_t i);
FBA_API void fba_forest_list_free(fba_forest_list* l);

/* ---- operations ---- */

typedef enum fba_coproduct_method { FBA_COPRODUCT_BIIDEAL = 0, FBA_COPRODUCT_RECURSIVE = 1 } fba_coproduct_method;

FBA_API fba_status fba_coproduct(const fba_forest* f, fba_coproduct_method method, fba_element** out);
FBA_API fba_status fba_counit(const fba_forest* f, fba_element** out);
FBA_API fba_status fba_star(const fba_forest* f, const fba_forest* g, fba_element** out);
/* Sums over every symbol of `a`. */
FBA_API fba_status fba_star_weighted(const fba_alphabet* a, const fba_forest* f, const fba_forest* g,
                                     fba_element** out);
FBA_API fba_status fba_prelie(const fba_forest* f, const fba_forest* g, fba_element** out);
FBA_API fba_status fba_bracket(const fba_forest* f, const fba_forest* g, fba_element** out);
/* `nu` is a rational such as "-1/2", or NULL for the indeterminate. */
FBA_API fba_status fba_phi(const fba_forest* f, const char* nu, fba_element** out);
FBA_API fba_status fba_theta(const fba_forest* f, const char* nu, fba_element** out);
FBA_API fba_status fba_concat(const fba_forest* f, const fba_forest* g, fba_element** out);
FBA_API fba_status fba_graft(const fba_alphabet* a, const char* omega, const fba_forest* f, fba_element** out);

FBA_API void fba_element_free(fba_element* e);
FBA_API int fba_element_arity(const fba_element* e);
/* Number of nonzero terms (monomials for a coefficient). */
FBA_API size_t fba_element_size(const fba_element* e);
FBA_API int fba_element_equal(const fba_element* a, const fba_element* b);
/* Substitutes the non-NULL rationals for lambda, mu, nu. */
FBA_API fba_status fba_element_evaluate(const fba_element* e, const char* lambda, const char* mu, const char* nu,
                                        fba_element** out);
/* Canonical text, or JSON when `json` is nonzero. */
FBA_API fba_status fba_element_render(const fba_element* e, int json, char** out);

/* ---- verification ---- */

typedef struct fba_verify_options {
  const char* omega;     /* NULL: the suite's default */
  const char* xset;      /* NULL: the suite's default */
  long max_vertices;     /* negative: the suite's default */
  const char* eval_lambda; /* NULL: symbolic */
  const char* eval_mu;
  const char* eval_nu;
  size_t workers;        /* 0 or 1: single thread */
} fba_verify_options;

FBA_API void fba_verify_options_init(fba_verify_options* o);
/* NULL past the end. */
FBA_API const char* fba_suite_name(size_t i);
FBA_API fba_status fba_verify(const char* suite, const fba_verify_options* o, fba_report** out);
FBA_API int fba_report_ok(const fba_report* r);
FBA_API size_t fba_report_cases(const fba_report* r);
FBA_API size_t fba_report_failures(const fba_report* r);
FBA_API double fba_report_seconds(const fba_report* r);
FBA_API fba_status fba_report_render(const fba_report* r, int json, int with_time, char** out);
FBA_API void fba_report_free(fba_report* r);

#ifdef __cplusplus
}
#endif

#endif /* FBA_H */
