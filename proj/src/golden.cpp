// Worked examples transcribed term by term. `W` in a forest stands for every
// Omega symbol in turn and `X` for every X symbol (used by sums over the
// alphabet).

#include <regex>

#include "fba/coalgebra.hpp"
#include "fba/dualprod.hpp"
#include "fba/morphisms.hpp"
#include "fba/prelie.hpp"
#include "fba/verify.hpp"

namespace fba {
namespace {

struct Term {
  const char* coeff;
  std::vector<const char*> legs;
};

std::vector<std::vector<std::string>> expand(const std::vector<const char*>& legs, const Alphabet& a) {
  static const std::regex w("\\bW\\b"), x("\\bX\\b");
  std::vector<std::vector<std::string>> out{{}};
  for (const char* l : legs) out.back().emplace_back(l);
  auto spread = [&](const std::regex& re, const std::vector<Symbol>& symbols) {
    std::vector<std::vector<std::string>> next;
    for (const auto& legs_text : out) {
      bool uses = false;
      for (const auto& l : legs_text) uses = uses || std::regex_search(l, re);
      if (!uses) {
        next.push_back(legs_text);
        continue;
      }
      for (const auto& s : symbols) {
        std::vector<std::string> replaced;
        for (const auto& l : legs_text) replaced.push_back(std::regex_replace(l, re, s.name()));
        next.push_back(std::move(replaced));
      }
    }
    out = std::move(next);
  };
  spread(w, a.omega());
  spread(x, a.xset());
  return out;
}

template <std::size_t N>
std::string transcribe(const std::vector<Term>& terms, const Alphabet& a) {
  if constexpr (N == 1) {
    LinComb<Forest> out;
    for (const auto& t : terms)
      for (const auto& legs : expand(t.legs, a)) out.add(parse_forest(legs[0], a), Coefficient::parse(t.coeff));
    return render_text(out);
  } else {
    LinComb<Tensor<N>> out;
    for (const auto& t : terms)
      for (const auto& legs : expand(t.legs, a)) {
        Tensor<N> b;
        for (std::size_t i = 0; i < N; ++i) b.legs[i] = parse_forest(legs[i], a);
        out.add(b, Coefficient::parse(t.coeff));
      }
    return render_text(out);
  }
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
  const Alphabet a({"alpha", "beta", "gamma", "delta", "omega"}, {"x", "y"});
  auto F = [&](const char* s) { return parse_forest(s, a); };
  auto L = [&](const char* s) { return LinComb<Forest>(F(s)); };
  std::vector<GoldenCase> out;
  auto add2 = [&](const char* name, const LinComb<Tensor2>& actual, const std::vector<Term>& expected) {
    out.push_back({name, transcribe<2>(expected, a), render_text(actual)});
  };
  auto add1 = [&](const char* name, const LinComb<Forest>& actual, const std::vector<Term>& expected,
                  const Alphabet& alphabet) {
    out.push_back({name, transcribe<1>(expected, alphabet), render_text(actual)});
  };

  // Coproducts.
  add2("D(1)", coproduct_rec(F("1")), {{"-l", {"1", "1"}}});
  add2("D(x)", coproduct_rec(F("x")), {{"m", {"1", "1"}}, {"-l", {"x", "1"}}, {"-l", {"1", "x"}}});
  add2("D(alpha)", coproduct_rec(F("alpha")),
       {{"m", {"1", "1"}}, {"-l", {"alpha", "1"}}, {"-l", {"1", "alpha"}}});
  add2("D(alpha[x])", coproduct_rec(F("alpha[x]")),
       {{"m", {"x", "1"}},
        {"m", {"1", "alpha"}},
        {"-l", {"alpha[x]", "1"}},
        {"-l", {"x", "alpha"}},
        {"-l", {"1", "alpha[x]"}}});
  add2("D(y alpha[x])", coproduct_rec(F("y alpha[x]")),
       {{"m", {"y x", "1"}},
        {"m", {"y", "alpha"}},
        {"m", {"1", "alpha[x]"}},
        {"-l", {"y alpha[x]", "1"}},
        {"-l", {"y x", "alpha"}},
        {"-l", {"y", "alpha[x]"}},
        {"-l", {"1", "y alpha[x]"}}});
  add2("D(alpha[y beta[x]])", coproduct_rec(F("alpha[y beta[x]]")),
       {{"m", {"1", "alpha[beta[x]]"}},
        {"m", {"y", "alpha[beta]"}},
        {"m", {"y x", "alpha"}},
        {"m", {"y beta[x]", "1"}},
        {"-l", {"alpha[y beta[x]]", "1"}},
        {"-l", {"y beta[x]", "alpha"}},
        {"-l", {"y x", "alpha[beta]"}},
        {"-l", {"y", "alpha[beta[x]]"}},
        {"-l", {"1", "alpha[y beta[x]]"}}});

  // Biideal expansions.
  add2("biideals of beta alpha[x]", coproduct_biideal(F("beta alpha[x]")),
       {{"m", {"1", "alpha[x]"}},
        {"m", {"beta", "alpha"}},
        {"m", {"beta x", "1"}},
        {"-l", {"1", "beta alpha[x]"}},
        {"-l", {"beta", "alpha[x]"}},
        {"-l", {"beta x", "alpha"}},
        {"-l", {"beta alpha[x]", "1"}}});
  add2("biideals of omega[alpha beta[x]]", coproduct_biideal(F("omega[alpha beta[x]]")),
       {{"m", {"1", "omega[beta[x]]"}},
        {"m", {"alpha", "omega[beta]"}},
        {"m", {"alpha x", "omega"}},
        {"m", {"alpha beta[x]", "1"}},
        {"-l", {"omega[alpha beta[x]]", "1"}},
        {"-l", {"alpha beta[x]", "omega"}},
        {"-l", {"alpha x", "omega[beta]"}},
        {"-l", {"alpha", "omega[beta[x]]"}},
        {"-l", {"1", "omega[alpha beta[x]]"}}});

  // (D x id) D (1)
  out.push_back({"(D x id) D(1)", transcribe<3>({{"l^2", {"1", "1", "1"}}}, a),
                 render_text(coproduct_left(coproduct_rec(F("1"))))});
  out.push_back({"e(x)", "-m*l^-2", counit(F("x")).str()});
  out.push_back({"e(1)", "-l^-1", counit(F("1")).str()});

  // Dual products.
  add1("alpha beta * gamma[delta]", star(F("alpha beta"), F("gamma[delta]")),
       {{"1", {"alpha beta gamma[delta]"}},
        {"1", {"alpha gamma[beta delta]"}},
        {"1", {"alpha gamma[delta[beta]]"}},
        {"1", {"gamma[alpha beta delta]"}},
        {"1", {"gamma[alpha delta[beta]]"}},
        {"1", {"gamma[delta[alpha beta]]"}}},
       a);
  add1("alpha beta * gamma[x]", star(F("alpha beta"), F("gamma[x]")),
       {{"1", {"alpha beta gamma[x]"}}, {"1", {"alpha gamma[beta x]"}}, {"1", {"gamma[alpha beta x]"}}}, a);

  const Alphabet small({"alpha", "beta", "gamma", "omega"}, {"x"});
  add1("alpha *_(l,m) beta[gamma]",
       star_weighted(LinComb<Forest>(parse_forest("alpha", small)), LinComb<Forest>(parse_forest("beta[gamma]", small)),
                     small),
       {{"-l", {"alpha beta[gamma]"}},
        {"-l", {"beta[alpha gamma]"}},
        {"-l", {"beta[gamma[alpha]]"}},
        {"m", {"alpha W beta[gamma]"}},
        {"m", {"W[alpha] beta[gamma]"}},
        {"m", {"alpha beta[W gamma]"}},
        {"m", {"beta[alpha W gamma]"}},
        {"m", {"beta[W[alpha] gamma]"}},
        {"m", {"alpha beta[gamma[W]]"}},
        {"m", {"beta[alpha gamma[W]]"}},
        {"m", {"beta[gamma[alpha W]]"}},
        {"m", {"beta[gamma[W[alpha]]]"}},
        {"m", {"alpha X beta[gamma]"}},
        {"m", {"alpha beta[X gamma]"}},
        {"m", {"beta[alpha X gamma]"}},
        {"m", {"alpha beta[gamma[X]]"}},
        {"m", {"beta[alpha gamma[X]]"}},
        {"m", {"beta[gamma[alpha X]]"}}},
       small);

  // phi_nu.
  add1("phi(alpha)", phi(L("alpha")), {{"1", {"alpha"}}, {"n", {"1"}}}, a);
  add1("phi(alpha[beta])", phi(L("alpha[beta]")),
       {{"1", {"alpha[beta]"}}, {"n", {"alpha"}}, {"n", {"beta"}}, {"n^2", {"1"}}}, a);
  add1("phi(alpha[beta gamma])", phi(L("alpha[beta gamma]")),
       {{"1", {"alpha[beta gamma]"}},
        {"n", {"alpha[beta]"}},
        {"n", {"alpha[gamma]"}},
        {"n", {"beta gamma"}},
        {"n^2", {"alpha"}},
        {"n^2", {"beta"}},
        {"n^2", {"gamma"}},
        {"n^3", {"1"}}},
       a);
  add1("phi(alpha[beta[gamma]])", phi(L("alpha[beta[gamma]]")),
       {{"1", {"alpha[beta[gamma]]"}},
        {"n", {"alpha[beta]"}},
        {"n", {"alpha[gamma]"}},
        {"n", {"beta[gamma]"}},
        {"n^2", {"alpha"}},
        {"n^2", {"beta"}},
        {"n^2", {"gamma"}},
        {"n^3", {"1"}}},
       a);

  // Pre-Lie products with F1 = x, F2 = alpha[beta], F3 = gamma y.
  auto f1 = L("x"), f2 = L("alpha[beta]"), f3 = L("gamma y");
  add1("x |> alpha[beta]", prelie(f1, f2),
       {{"m", {"x alpha"}},
        {"m", {"beta x"}},
        {"-l", {"x alpha[beta]"}},
        {"-l", {"beta x alpha"}},
        {"-l", {"alpha[beta] x"}}},
       a);
  add1("alpha[beta] |> x", prelie(f2, f1),
       {{"m", {"alpha[beta]"}}, {"-l", {"x alpha[beta]"}}, {"-l", {"alpha[beta] x"}}}, a);
  add1("[x, alpha[beta]]", bracket(f1, f2),
       {{"m", {"x alpha"}}, {"m", {"beta x"}}, {"-m", {"alpha[beta]"}}, {"-l", {"beta x alpha"}}}, a);
  add1("alpha[beta] |> gamma y", prelie(f2, f3),
       {{"m", {"alpha[beta] y"}},
        {"m", {"gamma alpha[beta]"}},
        {"-l", {"alpha[beta] gamma y"}},
        {"-l", {"gamma alpha[beta] y"}},
        {"-l", {"gamma y alpha[beta]"}}},
       a);
  add1("(x |> alpha[beta]) |> gamma y", prelie(prelie(f1, f2), f3),
       {{"m^2", {"x alpha y"}},
        {"m^2", {"beta x y"}},
        {"m^2", {"gamma x alpha"}},
        {"m^2", {"gamma beta x"}},
        {"-l*m", {"x alpha[beta] y"}},
        {"-l*m", {"alpha[beta] x y"}},
        {"-l*m", {"gamma alpha[beta] x"}},
        {"-l*m", {"gamma x alpha[beta]"}},
        {"-l*m", {"beta x alpha y"}},
        {"-l*m", {"gamma beta x alpha"}},
        {"-l*m", {"x alpha gamma y"}},
        {"-l*m", {"beta x gamma y"}},
        {"-l*m", {"gamma x alpha y"}},
        {"-l*m", {"gamma beta x y"}},
        {"-l*m", {"gamma y x alpha"}},
        {"-l*m", {"gamma y beta x"}},
        {"l^2", {"x alpha[beta] gamma y"}},
        {"l^2", {"beta x alpha gamma y"}},
        {"l^2", {"alpha[beta] x gamma y"}},
        {"l^2", {"gamma x alpha[beta] y"}},
        {"l^2", {"gamma beta x alpha y"}},
        {"l^2", {"gamma alpha[beta] x y"}},
        {"l^2", {"gamma y x alpha[beta]"}},
        {"l^2", {"gamma y beta x alpha"}},
        {"l^2", {"gamma y alpha[beta] x"}}},
       a);
  add1("x |> (alpha[beta] |> gamma y)", prelie(f1, prelie(f2, f3)),
       {{"m^2", {"x alpha y"}},
        {"m^2", {"beta x y"}},
        {"m^2", {"alpha[beta] x"}},
        {"m^2", {"x alpha[beta]"}},
        {"m^2", {"gamma x alpha"}},
        {"m^2", {"gamma beta x"}},
        {"-l*m", {"x alpha[beta] y"}},
        {"-l*m", {"beta x alpha y"}},
        {"-l*m", {"alpha[beta] x y"}},
        {"-l*m", {"alpha[beta] y x"}},
        {"-l*m", {"x gamma alpha[beta]"}},
        {"-l*m", {"gamma x alpha[beta]"}},
        {"-l*m", {"gamma beta x alpha"}},
        {"-l*m", {"gamma alpha[beta] x"}},
        {"-l*m", {"x alpha gamma y"}},
        {"-l*m", {"beta x gamma y"}},
        {"-l*m", {"alpha[beta] x y"}},
        {"-l*m", {"alpha[beta] gamma x"}},
        {"-l*m", {"x alpha[beta] y"}},
        {"-l*m", {"gamma x alpha y"}},
        {"-l*m", {"gamma beta x y"}},
        {"-l*m", {"gamma alpha[beta] x"}},
        {"-l*m", {"x y alpha[beta]"}},
        {"-l*m", {"gamma x alpha[beta]"}},
        {"-l*m", {"gamma y x alpha"}},
        {"-l*m", {"gamma y beta x"}},
        {"l^2", {"x alpha[beta] gamma y"}},
        {"l^2", {"beta x alpha gamma y"}},
        {"l^2", {"alpha[beta] x gamma y"}},
        {"l^2", {"alpha[beta] gamma x y"}},
        {"l^2", {"alpha[beta] gamma y x"}},
        {"l^2", {"x gamma alpha[beta] y"}},
        {"l^2", {"gamma x alpha[beta] y"}},
        {"l^2", {"gamma beta x alpha y"}},
        {"l^2", {"gamma alpha[beta] x y"}},
        {"l^2", {"gamma alpha[beta] y x"}},
        {"l^2", {"x gamma y alpha[beta]"}},
        {"l^2", {"gamma x y alpha[beta]"}},
        {"l^2", {"gamma y x alpha[beta]"}},
        {"l^2", {"gamma y beta x alpha"}},
        {"l^2", {"gamma y alpha[beta] x"}}},
       a);

  // The associator difference, and the same value with F1, F2 swapped.
  const std::vector<Term> associator{{"m^2", {"alpha[beta] x"}},
                                     {"m^2", {"x alpha[beta]"}},
                                     {"-l*m", {"alpha[beta] y x"}},
                                     {"-l*m", {"x y alpha[beta]"}},
                                     {"-l*m", {"alpha[beta] gamma x"}},
                                     {"-l*m", {"x gamma alpha[beta]"}},
                                     {"-l*m", {"alpha[beta] x y"}},
                                     {"-l*m", {"x alpha[beta] y"}},
                                     {"-l*m", {"gamma alpha[beta] x"}},
                                     {"-l*m", {"gamma x alpha[beta]"}},
                                     {"l^2", {"alpha[beta] gamma x y"}},
                                     {"l^2", {"x gamma alpha[beta] y"}},
                                     {"l^2", {"alpha[beta] gamma y x"}},
                                     {"l^2", {"x gamma y alpha[beta]"}},
                                     {"l^2", {"gamma alpha[beta] y x"}},
                                     {"l^2", {"gamma x y alpha[beta]"}}};
  add1("x |> (alpha[beta] |> gamma y) - (x |> alpha[beta]) |> gamma y",
       prelie(f1, prelie(f2, f3)) - prelie(prelie(f1, f2), f3), associator, a);
  add1("alpha[beta] |> (x |> gamma y) - (alpha[beta] |> x) |> gamma y",
       prelie(f2, prelie(f1, f3)) - prelie(prelie(f2, f1), f3), associator, a);
  return out;
}

}  // namespace fba
