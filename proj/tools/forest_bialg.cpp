// forest-bialg: command-line front end over the C API.
//
// Exit status: 0 success, 1 a verification suite found a counterexample,
// 2 usage, parse or evaluation error.

#include <fba.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<std::string> omega;
  std::optional<std::string> xset;
  std::optional<long> max_vertices;
  std::optional<std::string> eval_lambda, eval_mu, eval_nu;
  bool json = false;
  std::size_t workers = 1;
  bool recursive = false;
  std::vector<std::string> args;
};

struct Error {
  fba_status status;
  std::string message;
};

void check(fba_status s) {
  if (s != FBA_OK) throw Error{s, fba_last_error()};
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using AlphabetH = Handle<fba_alphabet, fba_alphabet_free>;
using ForestH = Handle<fba_forest, fba_forest_free>;
using ElementH = Handle<fba_element, fba_element_free>;
using ListH = Handle<fba_forest_list, fba_forest_list_free>;
using ReportH = Handle<fba_report, fba_report_free>;

std::string take(char* s) {
  std::string out = s ? s : "";
  fba_string_free(s);
  return out;
}

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return out;
}

std::set<std::string> split(const std::string& csv) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    if (end > start) out.insert(csv.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// Without --omega, every identifier in the arguments that is not an X symbol
// is taken as an Omega symbol. X defaults to {x}.
AlphabetH expression_alphabet(const Options& o, const std::vector<std::string>& texts) {
  std::string xset = o.xset.value_or("x");
  std::string omega;
  if (o.omega) {
    omega = *o.omega;
  } else {
    auto xs = split(xset);
    std::set<std::string> found;
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    for (const auto& t : texts)
      for (std::sregex_iterator it(t.begin(), t.end(), ident), end; it != end; ++it)
        if (!xs.count(it->str())) found.insert(it->str());
    omega = found.empty() ? "a,b" : join(found);
  }
  AlphabetH a;
  check(fba_alphabet_new(omega.c_str(), xset.c_str(), a.out()));
  return a;
}

ForestH parse(const AlphabetH& a, const std::string& text) {
  ForestH f;
  fba_status s = fba_forest_parse(a.get(), text.c_str(), f.out());
  if (s != FBA_OK) throw Error{s, "'" + text + "': " + fba_last_error()};
  return f;
}

int print_element(const Options& o, ElementH e) {
  if (o.eval_lambda || o.eval_mu || o.eval_nu) {
    ElementH v;
    check(fba_element_evaluate(e.get(), opt(o.eval_lambda), opt(o.eval_mu), opt(o.eval_nu), v.out()));
    e = std::move(v);
  }
  char* text = nullptr;
  check(fba_element_render(e.get(), o.json ? 1 : 0, &text));
  std::cout << take(text) << '\n';
  return 0;
}

using Binary = fba_status (*)(const fba_forest*, const fba_forest*, fba_element**);

int run_unary(const Options& o, const std::function<fba_status(const fba_forest*, fba_element**)>& op) {
  auto a = expression_alphabet(o, o.args);
  auto f = parse(a, o.args.at(0));
  ElementH e;
  check(op(f.get(), e.out()));
  return print_element(o, std::move(e));
}

int run_binary(const Options& o, const std::function<fba_status(const fba_alphabet*, const fba_forest*,
                                                                  const fba_forest*, fba_element**)>& op) {
  auto a = expression_alphabet(o, o.args);
  auto f = parse(a, o.args.at(0));
  auto g = parse(a, o.args.at(1));
  ElementH e;
  check(op(a.get(), f.get(), g.get(), e.out()));
  return print_element(o, std::move(e));
}

Binary plain(Binary b) { return b; }

int run_enumerate(const Options& o) {
  AlphabetH a;
  check(fba_alphabet_new(o.omega.value_or("a,b").c_str(), o.xset.value_or("x").c_str(), a.out()));
  long n = o.max_vertices.value_or(3);
  if (n < 0) throw Error{FBA_ERR_INVALID_ARGUMENT, "--max-vertices must be non-negative"};
  ListH list;
  check(fba_enumerate(a.get(), static_cast<size_t>(n), list.out()));
  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::string> texts;
  for (size_t i = 0; i < fba_forest_list_size(list.get()); ++i) {
    const fba_forest* f = fba_forest_list_get(list.get(), i);
    char* t = nullptr;
    check(fba_forest_render(f, &t));
    texts.push_back(take(t));
    ++counts[fba_forest_nvertices(f)];
  }
  if (o.json) {
    nlohmann::json j;
    j["forests"] = texts;
    j["counts"] = counts;
    j["total"] = texts.size();
    std::cout << j.dump() << '\n';
    return 0;
  }
  for (const auto& t : texts) std::cout << t << '\n';
  std::cout << "counts by size:";
  for (std::size_t k = 0; k < counts.size(); ++k) std::cout << ' ' << k << ':' << counts[k];
  std::cout << " total:" << texts.size() << '\n';
  return 0;
}

int run_verify(const Options& o) {
  fba_verify_options v;
  fba_verify_options_init(&v);
  v.omega = opt(o.omega);
  v.xset = opt(o.xset);
  if (o.max_vertices) {
    if (*o.max_vertices < 0) throw Error{FBA_ERR_INVALID_ARGUMENT, "--max-vertices must be non-negative"};
    v.max_vertices = *o.max_vertices;
  }
  v.eval_lambda = opt(o.eval_lambda);
  v.eval_mu = opt(o.eval_mu);
  v.eval_nu = opt(o.eval_nu);
  v.workers = o.workers;
  ReportH r;
  check(fba_verify(o.args.at(0).c_str(), &v, r.out()));
  char* text = nullptr;
  check(fba_report_render(r.get(), o.json ? 1 : 0, 1, &text));
  std::cout << take(text);
  if (o.json) std::cout << '\n';
  return fba_report_ok(r.get()) ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the weighted infinitesimal bialgebra of decorated planar rooted forests."};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--omega", o.omega, "Omega symbols, comma separated");
    sub->add_option("--xset", o.xset, "X symbols (leaf only), comma separated");
    sub->add_option("--max-vertices", o.max_vertices, "vertex bound");
    sub->add_option("--eval-lambda", o.eval_lambda, "substitute a rational for lambda");
    sub->add_option("--eval-mu", o.eval_mu, "substitute a rational for mu");
    sub->add_option("--eval-nu", o.eval_nu, "substitute a rational for nu");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--workers", o.workers, "worker threads for verify")->check(CLI::PositiveNumber);
  };

  std::function<int()> action;
  auto unary = [&](const char* name, const char* help, std::function<fba_status(const fba_forest*, fba_element**)> op) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    sub->add_option("forest", o.args, "forest")->required()->expected(1);
    sub->callback([&, op] { action = [&, op] { return run_unary(o, op); }; });
    return sub;
  };
  auto binary = [&](const char* name, const char* help,
                    std::function<fba_status(const fba_alphabet*, const fba_forest*, const fba_forest*, fba_element**)> op) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    sub->add_option("forests", o.args, "two forests")->required()->expected(2);
    sub->callback([&, op] { action = [&, op] { return run_binary(o, op); }; });
  };
  auto drop_alphabet = [](Binary b) {
    return [b](const fba_alphabet*, const fba_forest* f, const fba_forest* g, fba_element** out) {
      return b(f, g, out);
    };
  };

  auto* cop = unary("coproduct", "the coproduct of a forest",
                    [&](const fba_forest* f, fba_element** out) {
                      return fba_coproduct(f, o.recursive ? FBA_COPRODUCT_RECURSIVE : FBA_COPRODUCT_BIIDEAL, out);
                    });
  cop->add_flag("--recursive", o.recursive, "use the recursive definition instead of biideals");
  unary("counit", "the counit of a forest", fba_counit);
  unary("phi", "the automorphism phi_nu", [&](const fba_forest* f, fba_element** out) { return fba_phi(f, nullptr, out); });
  unary("theta", "the rescaling theta_nu", [&](const fba_forest* f, fba_element** out) { return fba_theta(f, nullptr, out); });
  binary("star", "the dual product F * G", drop_alphabet(plain(fba_star)));
  binary("star-weighted", "the weighted dual product, summed over the alphabet", fba_star_weighted);
  binary("prelie", "the pre-Lie product F |> G", drop_alphabet(plain(fba_prelie)));
  binary("bracket", "the Lie bracket [F, G]", drop_alphabet(plain(fba_bracket)));
  binary("concat", "concatenation F G", drop_alphabet(plain(fba_concat)));

  auto* graft = app.add_subcommand("graft", "graft a forest under a new root");
  common(graft);
  graft->add_option("args", o.args, "omega symbol and forest")->required()->expected(2);
  graft->callback([&] {
    action = [&] {
      auto a = expression_alphabet(o, o.args);
      auto f = parse(a, o.args.at(1));
      ElementH e;
      check(fba_graft(a.get(), o.args.at(0).c_str(), f.get(), e.out()));
      return print_element(o, std::move(e));
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "list every forest up to --max-vertices (default 3)");
  common(enumerate);
  enumerate->callback([&] { action = [&] { return run_enumerate(o); }; });

  std::string suites;
  for (size_t i = 0; const char* s = fba_suite_name(i); ++i) suites += std::string(i ? ", " : "") + s;
  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite: " + suites);
  common(verify);
  verify->add_option("suite", o.args, "suite name")->required()->expected(1);
  verify->callback([&] { action = [&] { return run_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  }
}
