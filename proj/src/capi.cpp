#include "fba.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <variant>

#include "fba/coalgebra.hpp"
#include "fba/dualprod.hpp"
#include "fba/error.hpp"
#include "fba/morphisms.hpp"
#include "fba/prelie.hpp"
#include "fba/verify.hpp"

struct fba_alphabet {
  fba::Alphabet value;
};
struct fba_forest {
  fba::Forest value;
};
struct fba_forest_list {
  std::vector<fba_forest> items;
};
struct fba_element {
  std::variant<fba::Coefficient, fba::LinComb<fba::Forest>, fba::LinComb<fba::Tensor2>, fba::LinComb<fba::Tensor3>>
      value;
};
struct fba_report {
  fba::SuiteReport value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_position = static_cast<std::size_t>(-1);

fba_status set_error(fba_status s, const char* what, std::size_t position = static_cast<std::size_t>(-1)) {
  last_error = what;
  last_position = position;
  return s;
}

template <class F>
fba_status guard(F&& body) {
  try {
    body();
    return FBA_OK;
  } catch (const fba::ParseError& e) {
    return set_error(FBA_ERR_PARSE, e.what(), e.position());
  } catch (const fba::SymbolError& e) {
    return set_error(FBA_ERR_SYMBOL, e.what());
  } catch (const fba::PoleError& e) {
    return set_error(FBA_ERR_POLE, e.what());
  } catch (const fba::UnknownSuiteError& e) {
    return set_error(FBA_ERR_UNKNOWN_SUITE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FBA_ERR_INTERNAL, "out of memory");
  } catch (const std::invalid_argument& e) {
    return set_error(FBA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(FBA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return set_error(FBA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(FBA_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FBA_ERR_INTERNAL, "unknown error");
  }
}

struct NullArgument : std::invalid_argument {
  NullArgument() : std::invalid_argument("null argument") {}
};

template <class... P>
void require(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument();
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<fba::Rational> optional_rational(const char* text) {
  if (!text) return std::nullopt;
  return fba::Rational::parse(text);
}

template <class V>
fba_status emit(fba_element** out, V&& compute) {
  return guard([&] {
    require(out);
    *out = new fba_element{compute()};
  });
}

}  // namespace

extern "C" {

const char* fba_last_error(void) { return last_error.c_str(); }
size_t fba_last_error_position(void) { return last_position; }
void fba_string_free(char* s) { std::free(s); }

fba_status fba_alphabet_new(const char* omega, const char* xset, fba_alphabet** out) {
  return guard([&] {
    require(omega, out);
    *out = new fba_alphabet{fba::Alphabet::from_lists(omega, xset ? xset : "")};
  });
}
void fba_alphabet_free(fba_alphabet* a) { delete a; }

fba_status fba_forest_parse(const fba_alphabet* a, const char* text, fba_forest** out) {
  return guard([&] {
    require(a, text, out);
    *out = new fba_forest{fba::parse_forest(text, a->value)};
  });
}
void fba_forest_free(fba_forest* f) { delete f; }
fba_status fba_forest_render(const fba_forest* f, char** out) {
  return guard([&] {
    require(f, out);
    *out = copy_string(fba::render_forest(f->value));
  });
}
size_t fba_forest_nvertices(const fba_forest* f) { return f ? f->value.nvertices() : 0; }
size_t fba_forest_breadth(const fba_forest* f) { return f ? f->value.breadth() : 0; }
size_t fba_forest_depth(const fba_forest* f) { return f ? f->value.depth() : 0; }

fba_status fba_enumerate(const fba_alphabet* a, size_t n_max, fba_forest_list** out) {
  return guard([&] {
    require(a, out);
    auto list = std::make_unique<fba_forest_list>();
    for (auto& f : fba::enumerate_forests(n_max, a->value)) list->items.push_back(fba_forest{std::move(f)});
    *out = list.release();
  });
}
size_t fba_forest_list_size(const fba_forest_list* l) { return l ? l->items.size() : 0; }
const fba_forest* fba_forest_list_get(const fba_forest_list* l, size_t i) {
  return l && i < l->items.size() ? &l->items[i] : nullptr;
}
void fba_forest_list_free(fba_forest_list* l) { delete l; }

fba_status fba_coproduct(const fba_forest* f, fba_coproduct_method method, fba_element** out) {
  return emit(out, [&] {
    require(f);
    return method == FBA_COPRODUCT_RECURSIVE ? fba::coproduct_rec(f->value) : fba::coproduct_biideal(f->value);
  });
}

fba_status fba_counit(const fba_forest* f, fba_element** out) {
  return emit(out, [&] {
    require(f);
    return fba::counit(f->value);
  });
}

fba_status fba_star(const fba_forest* f, const fba_forest* g, fba_element** out) {
  return emit(out, [&] {
    require(f, g);
    return fba::star(f->value, g->value);
  });
}

fba_status fba_star_weighted(const fba_alphabet* a, const fba_forest* f, const fba_forest* g, fba_element** out) {
  return emit(out, [&] {
    require(a, f, g);
    return fba::star_weighted(fba::LinComb<fba::Forest>(f->value), fba::LinComb<fba::Forest>(g->value), a->value);
  });
}

fba_status fba_prelie(const fba_forest* f, const fba_forest* g, fba_element** out) {
  return emit(out, [&] {
    require(f, g);
    return fba::prelie_closed(f->value, g->value);
  });
}

fba_status fba_bracket(const fba_forest* f, const fba_forest* g, fba_element** out) {
  return emit(out, [&] {
    require(f, g);
    return fba::bracket(f->value, g->value);
  });
}

fba_status fba_phi(const fba_forest* f, const char* nu, fba_element** out) {
  return emit(out, [&] {
    require(f);
    auto p = nu ? fba::Coefficient(fba::Rational::parse(nu)) : fba::Coefficient::nu();
    return fba::phi(f->value, p);
  });
}

fba_status fba_theta(const fba_forest* f, const char* nu, fba_element** out) {
  return emit(out, [&] {
    require(f);
    auto p = nu ? fba::Coefficient(fba::Rational::parse(nu)) : fba::Coefficient::nu();
    return fba::theta(fba::LinComb<fba::Forest>(f->value), p);
  });
}

fba_status fba_concat(const fba_forest* f, const fba_forest* g, fba_element** out) {
  return emit(out, [&] {
    require(f, g);
    return fba::LinComb<fba::Forest>(fba::concat(f->value, g->value));
  });
}

fba_status fba_graft(const fba_alphabet* a, const char* omega, const fba_forest* f, fba_element** out) {
  return emit(out, [&] {
    require(a, omega, f);
    auto d = a->value.decoration(omega);
    if (d.kind != fba::Kind::omega) throw fba::SymbolError(std::string("cannot graft under X symbol '") + omega + "'");
    return fba::LinComb<fba::Forest>(fba::graft(d, f->value).as_forest());
  });
}

void fba_element_free(fba_element* e) { delete e; }

int fba_element_arity(const fba_element* e) { return e ? static_cast<int>(e->value.index()) : -1; }

size_t fba_element_size(const fba_element* e) {
  if (!e) return 0;
  return std::visit(
      [](const auto& v) -> size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, fba::Coefficient>) {
          return v.terms().size();
        } else {
          return v.size();
        }
      },
      e->value);
}

int fba_element_equal(const fba_element* a, const fba_element* b) { return a && b && a->value == b->value; }

fba_status fba_element_evaluate(const fba_element* e, const char* lambda, const char* mu, const char* nu,
                                fba_element** out) {
  return emit(out, [&] {
    require(e);
    auto l = optional_rational(lambda), m = optional_rational(mu), n = optional_rational(nu);
    return std::visit(
        [&](const auto& v) -> decltype(fba_element::value) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, fba::Coefficient>) {
            return v.eval_partial(l, m, n);
          } else {
            return fba::eval_partial(v, l, m, n);
          }
        },
        e->value);
  });
}

fba_status fba_element_render(const fba_element* e, int json, char** out) {
  return guard([&] {
    require(e, out);
    auto text = std::visit(
        [&](const auto& v) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, fba::Coefficient>) {
            return json ? v.json() : v.str();
          } else {
            return json ? fba::render_json(v) : fba::render_text(v);
          }
        },
        e->value);
    *out = copy_string(text);
  });
}

void fba_verify_options_init(fba_verify_options* o) {
  if (!o) return;
  *o = fba_verify_options{nullptr, nullptr, -1, nullptr, nullptr, nullptr, 1};
}

const char* fba_suite_name(size_t i) {
  const auto& names = fba::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

namespace {
std::vector<std::string> split_csv(const char* text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (*p != ' ') {
      cur += *p;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}
}  // namespace

fba_status fba_verify(const char* suite, const fba_verify_options* o, fba_report** out) {
  return guard([&] {
    require(suite, out);
    fba::RunConfig c;
    if (o) {
      if (o->omega) c.omega = split_csv(o->omega);
      if (o->xset) c.xset = split_csv(o->xset);
      if (o->max_vertices >= 0) c.max_vertices = static_cast<std::size_t>(o->max_vertices);
      c.eval_lambda = optional_rational(o->eval_lambda);
      c.eval_mu = optional_rational(o->eval_mu);
      c.eval_nu = optional_rational(o->eval_nu);
      c.workers = o->workers ? o->workers : 1;
    }
    *out = new fba_report{fba::run_suite(suite, c)};
  });
}

int fba_report_ok(const fba_report* r) { return r && r->value.ok(); }
size_t fba_report_cases(const fba_report* r) { return r ? r->value.cases : 0; }
size_t fba_report_failures(const fba_report* r) { return r ? r->value.failure_count : 0; }
double fba_report_seconds(const fba_report* r) { return r ? r->value.wall_seconds : 0; }

fba_status fba_report_render(const fba_report* r, int json, int with_time, char** out) {
  return guard([&] {
    require(r, out);
    *out = copy_string(json ? r->value.json(with_time != 0) : r->value.text(with_time != 0));
  });
}

void fba_report_free(fba_report* r) { delete r; }

}  // extern "C"
