/* Exercises the shared library through its C header only. */
#include <fba.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static int render_is(const fba_element* e, int json, const char* want) {
  char* text = NULL;
  int ok;
  if (fba_element_render(e, json, &text) != FBA_OK) return 0;
  ok = strcmp(text, want) == 0;
  if (!ok) fprintf(stderr, "got:\n%s\nwant:\n%s\n", text, want);
  fba_string_free(text);
  return ok;
}

static void test_forests(void) {
  fba_alphabet* a = NULL;
  fba_forest* f = NULL;
  fba_forest* bad = NULL;
  char* text = NULL;

  EXPECT(fba_alphabet_new("a,b", "x,y", &a) == FBA_OK);
  EXPECT(fba_alphabet_new("", "x", &(fba_alphabet*){NULL}) == FBA_ERR_SYMBOL);

  EXPECT(fba_forest_parse(a, "y   a[x b]", &f) == FBA_OK);
  EXPECT(fba_forest_nvertices(f) == 4);
  EXPECT(fba_forest_breadth(f) == 2);
  EXPECT(fba_forest_depth(f) == 2);
  EXPECT(fba_forest_render(f, &text) == FBA_OK);
  EXPECT(strcmp(text, "y a[x b]") == 0);
  fba_string_free(text);

  EXPECT(fba_forest_parse(a, "a[x", &bad) == FBA_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(fba_last_error_position() == 3);
  EXPECT(strstr(fba_last_error(), "position") != NULL);
  EXPECT(fba_forest_parse(a, "x[a]", &bad) == FBA_ERR_SYMBOL);
  EXPECT(fba_forest_parse(a, "zz", &bad) == FBA_ERR_SYMBOL);
  EXPECT(fba_last_error_position() == (size_t)-1);

  fba_forest_free(f);
  fba_alphabet_free(a);
}

static void test_enumerate(void) {
  fba_alphabet* a = NULL;
  fba_forest_list* l = NULL;
  char* text = NULL;
  EXPECT(fba_alphabet_new("a", "x", &a) == FBA_OK);
  EXPECT(fba_enumerate(a, 2, &l) == FBA_OK);
  EXPECT(fba_forest_list_size(l) == 9);
  EXPECT(fba_forest_render(fba_forest_list_get(l, 0), &text) == FBA_OK);
  EXPECT(strcmp(text, "1") == 0);
  fba_string_free(text);
  EXPECT(fba_forest_list_get(l, 9) == NULL);
  fba_forest_list_free(l);
  fba_alphabet_free(a);
}

static void test_operations(void) {
  fba_alphabet* a = NULL;
  fba_forest *x = NULL, *t = NULL, *one = NULL;
  fba_element *e = NULL, *r = NULL, *v = NULL;

  EXPECT(fba_alphabet_new("alpha,beta", "x", &a) == FBA_OK);
  EXPECT(fba_forest_parse(a, "x", &x) == FBA_OK);
  EXPECT(fba_forest_parse(a, "alpha[x]", &t) == FBA_OK);
  EXPECT(fba_forest_parse(a, "1", &one) == FBA_OK);

  EXPECT(fba_counit(x, &e) == FBA_OK);
  EXPECT(fba_element_arity(e) == 0);
  EXPECT(render_is(e, 0, "-m*l^-2"));
  EXPECT(render_is(e, 1, "[{\"q\": \"-1\", \"l\": -2, \"m\": 1, \"n\": 0}]"));
  EXPECT(fba_element_evaluate(e, "0", NULL, NULL, &v) == FBA_ERR_POLE);
  EXPECT(fba_element_evaluate(e, "1", "1", NULL, &v) == FBA_OK);
  EXPECT(render_is(v, 0, "-1"));
  fba_element_free(v);
  fba_element_free(e);

  EXPECT(fba_coproduct(t, FBA_COPRODUCT_BIIDEAL, &e) == FBA_OK);
  EXPECT(fba_coproduct(t, FBA_COPRODUCT_RECURSIVE, &r) == FBA_OK);
  EXPECT(fba_element_arity(e) == 2);
  EXPECT(fba_element_size(e) == 5);
  EXPECT(fba_element_equal(e, r));
  EXPECT(render_is(e, 0,
                   "m  1 ⊗ alpha\n"
                   "-l  1 ⊗ alpha[x]\n"
                   "-l  alpha[x] ⊗ 1\n"
                   "m  x ⊗ 1\n"
                   "-l  x ⊗ alpha"));
  fba_element_free(r);
  fba_element_free(e);

  EXPECT(fba_prelie(one, x, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "m  1\n-2*l  x"));
  fba_element_free(e);

  EXPECT(fba_bracket(t, t, &e) == FBA_OK);
  EXPECT(fba_element_size(e) == 0);
  EXPECT(render_is(e, 0, "0"));
  fba_element_free(e);

  EXPECT(fba_star(x, t, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "1  alpha[x x]\n1  x alpha[x]"));
  fba_element_free(e);

  EXPECT(fba_star_weighted(a, one, one, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "-l  1\nm  alpha\nm  beta\nm  x"));
  fba_element_free(e);

  EXPECT(fba_phi(x, NULL, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "n  1\n1  x"));
  fba_element_free(e);
  EXPECT(fba_phi(x, "-1/2", &e) == FBA_OK);
  EXPECT(render_is(e, 0, "-1/2  1\n1  x"));
  fba_element_free(e);
  EXPECT(fba_phi(x, "1/0", &e) == FBA_ERR_PARSE);

  EXPECT(fba_theta(t, NULL, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "n^2  alpha[x]"));
  fba_element_free(e);

  EXPECT(fba_concat(x, t, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "1  x alpha[x]"));
  fba_element_free(e);

  EXPECT(fba_graft(a, "beta", t, &e) == FBA_OK);
  EXPECT(render_is(e, 0, "1  beta[alpha[x]]"));
  fba_element_free(e);
  EXPECT(fba_graft(a, "x", t, &e) == FBA_ERR_SYMBOL);
  EXPECT(fba_graft(a, "gamma", t, &e) == FBA_ERR_SYMBOL);

  fba_forest_free(one);
  fba_forest_free(t);
  fba_forest_free(x);
  fba_alphabet_free(a);
}

static void test_verify(void) {
  fba_verify_options o;
  fba_report* r = NULL;
  char* text = NULL;
  size_t n = 0;

  while (fba_suite_name(n)) ++n;
  EXPECT(n == 15);

  fba_verify_options_init(&o);
  o.max_vertices = 3;
  EXPECT(fba_verify("coassoc", &o, &r) == FBA_OK);
  EXPECT(fba_report_ok(r));
  EXPECT(fba_report_cases(r) == 112);
  EXPECT(fba_report_failures(r) == 0);
  EXPECT(fba_report_seconds(r) >= 0);
  EXPECT(fba_report_render(r, 0, 0, &text) == FBA_OK);
  EXPECT(strcmp(text, "suite coassoc: PASS (112 cases, 0 failures)\n") == 0);
  fba_string_free(text);
  fba_report_free(r);

  r = NULL;
  EXPECT(fba_verify("no-such-suite", &o, &r) == FBA_ERR_UNKNOWN_SUITE);
  EXPECT(r == NULL);
  o.eval_lambda = "0";
  EXPECT(fba_verify("counit", &o, &r) == FBA_ERR_POLE);
  o.eval_lambda = "zero";
  EXPECT(fba_verify("counit", &o, &r) == FBA_ERR_PARSE);
  o.eval_lambda = NULL;
  o.omega = "a";
  o.xset = "a";
  EXPECT(fba_verify("counit", &o, &r) == FBA_ERR_SYMBOL);
  EXPECT(r == NULL);

  EXPECT(fba_verify("examples-golden", NULL, &r) == FBA_OK);
  EXPECT(fba_report_ok(r));
  fba_report_free(r);
}

int main(void) {
  test_forests();
  test_enumerate();
  test_operations();
  test_verify();
  fba_string_free(NULL);
  fba_element_free(NULL);
  if (failures) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  puts("C API checks passed");
  return 0;
}
