#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace fbatest;

namespace {

Coefficient random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), lpow(-3, 3), pow(0, 3), num(-9, 9), den(1, 5);
  Coefficient out;
  for (int i = terms(rng); i > 0; --i) {
    Monomial m{lpow(rng), static_cast<std::uint32_t>(pow(rng)), static_cast<std::uint32_t>(pow(rng))};
    out += Coefficient(Rational(num(rng), den(rng)), m);
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  while (true) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

}  // namespace

TEST_SUITE("freemod") {
  TEST_CASE("rationals") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").str() == "7");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational::parse("123456789012345678901234567890") * Rational(0) == Rational(0));
  }

  TEST_CASE("coefficient examples") {
    auto l = Coefficient::lambda(), m = Coefficient::mu(), n = Coefficient::nu();
    CHECK(l * Coefficient::lambda(-1) == Coefficient(1));
    auto zero = -l + l;
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK(zero.str() == "0");

    // (m - l n)^2 expanded by hand, monomial by monomial.
    auto square = (m - l * n).pow(2);
    Coefficient by_hand;
    by_hand += Coefficient(Rational(1), Monomial{0, 2, 0});
    by_hand += Coefficient(Rational(-2), Monomial{1, 1, 1});
    by_hand += Coefficient(Rational(1), Monomial{2, 0, 2});
    CHECK(square == by_hand);
    CHECK(square.terms().size() == 3);
    CHECK(square.at(Monomial{1, 1, 1}) == Rational(-2));
  }

  TEST_CASE("canonical text") {
    CHECK((-Coefficient::lambda() + Coefficient::mu() - Coefficient::lambda() * Coefficient::nu()).str() ==
          "-l + m - l*n");
    CHECK((-Coefficient::mu() * Coefficient::lambda(-2)).str() == "-m*l^-2");
    CHECK(Coefficient::lambda(-1).str() == "l^-1");
    CHECK(Coefficient(Rational(-3, 2)).str() == "-3/2");
    CHECK(Coefficient(Rational(1, 2), Monomial{0, 2, 0}).str() == "1/2*m^2");
    for (const char* text : {"0", "1", "-l", "m - l*n", "-m*l^-2", "3/4*m^2*n + l^3", "-l^-1 + 2"}) {
      auto c = C(text);
      CHECK(C(c.str()) == c);
    }
    CHECK(C("l*l^-1") == Coefficient(1));
    CHECK_THROWS_AS(C("m^-1"), ParseError);
    CHECK_THROWS_AS(C("q"), ParseError);
    CHECK_THROWS_AS(C(""), ParseError);
    CHECK(C("-l + m").json() == R"([{"q": "-1", "l": 1, "m": 0, "n": 0}, {"q": "1", "l": 0, "m": 1, "n": 0}])");
  }

  TEST_CASE("substitution for mu") {
    auto l = Coefficient::lambda(), m = Coefficient::mu(), n = Coefficient::nu();
    CHECK(m.subst_mu(m - l * n) == m - l * n);
    CHECK(m.pow(2).subst_mu(m * n) == m.pow(2) * n.pow(2));
    CHECK((-l + m).subst_mu(m - l * n) == -l + m - l * n);
    CHECK(Coefficient(5).subst_mu(n) == Coefficient(5));
    CHECK_THROWS(m.subst_mu(Coefficient::lambda(-1)));
  }

  TEST_CASE("evaluation") {
    CHECK((-Coefficient::lambda()).eval(Rational(-1), Rational(0), Rational(0)) == Rational(1));
    CHECK(C("-m*l^-2").eval(Rational(1), Rational(1), Rational(0)) == Rational(-1));
    CHECK_THROWS_AS(C("l^-1").eval(Rational(0), Rational(0), Rational(0)), PoleError);
    CHECK(C("l^2 + m").eval(Rational(0), Rational(3), Rational(0)) == Rational(3));

    auto partial = C("l^-1*m + n").eval_partial(std::nullopt, Rational(2), std::nullopt);
    CHECK(partial == C("2*l^-1 + n"));
    CHECK_THROWS_AS(C("l^-1").eval_partial(Rational(0), std::nullopt, std::nullopt), PoleError);
  }

  TEST_CASE("ring axioms on random coefficients") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 1000; ++i) {
      auto a = random_coefficient(rng), b = random_coefficient(rng), c = random_coefficient(rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == Coefficient());
      REQUIRE(a * Coefficient(1) == a);
      REQUIRE((a * Coefficient()).is_zero());
      for (const auto& [mono, q] : (a * b).terms()) REQUIRE_FALSE(q.is_zero());
    }
  }

  TEST_CASE("evaluation is a ring morphism") {
    std::mt19937_64 rng(7031);
    for (int i = 0; i < 1000; ++i) {
      auto a = random_coefficient(rng), b = random_coefficient(rng);
      auto l0 = random_rational(rng, true), m0 = random_rational(rng, false), n0 = random_rational(rng, false);
      REQUIRE((a * b).eval(l0, m0, n0) == a.eval(l0, m0, n0) * b.eval(l0, m0, n0));
      REQUIRE((a + b).eval(l0, m0, n0) == a.eval(l0, m0, n0) + b.eval(l0, m0, n0));
    }
  }

  TEST_CASE("linear combinations") {
    auto f = F("alpha[x]"), g = F("beta");
    LinComb<Forest> x(f, C("2"));
    x.add(g, C("l"));
    CHECK(x + LinComb<Forest>() == x);
    LinComb<Forest> cancel(f, C("2"));
    cancel.add(f, C("-2"));
    CHECK(cancel.is_zero());
    CHECK(cancel.size() == 0);

    auto t = tensor(LinComb<Forest>(f, C("3")), LinComb<Forest>(g, C("m")));
    CHECK(t == LinComb<Tensor2>(Tensor2{{f, g}}, C("3*m")));
    auto t3 = tensor(t, LinComb<Forest>(g));
    CHECK(t3.size() == 1);

    CHECK(render_text(LinComb<Forest>()) == "0");
    CHECK(render_text(lin({{"-l + m", "x"}, {"2", "alpha"}})) == "2  alpha\n(-l + m)  x");
    CHECK(render_json(lin2({{"-l", {"alpha[x]", "1"}}})) ==
          R"([{"coeff": [{"q": "-1", "l": 1, "m": 0, "n": 0}], "legs": ["alpha[x]", "1"]}])");
  }

  TEST_CASE("bimodule actions") {
    auto t = lin2({{"m", {"alpha", "beta[x]"}}, {"-l", {"1", "y"}}});
    CHECK(act_left(Forest(), t) == t);
    CHECK(act_right(t, Forest()) == t);
    CHECK(act_left(F("x"), lin2({{"1", {"gamma", "delta"}}})) == lin2({{"1", {"x gamma", "delta"}}}));
    CHECK(act_right(lin2({{"1", {"gamma", "delta"}}}), F("x")) == lin2({{"1", {"gamma", "delta x"}}}));
    CHECK(multiply(lin({{"2", "x"}}), lin({{"l", "y"}, {"1", "1"}})) == lin({{"2*l", "x y"}, {"2", "x"}}));
  }
}
