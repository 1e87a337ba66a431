#include <doctest.h>

#include "support.hpp"

using namespace fbatest;

namespace {

Forest word(const std::vector<Forest>& letters, std::size_t from, std::size_t to) {
  Forest out;
  for (std::size_t i = from; i < to; ++i) out = concat(out, letters[i]);
  return out;
}

// Coproduct of a word of X-points, straight from its closed formula.
LinComb<Tensor2> word_coproduct(const std::vector<Forest>& letters) {
  const std::size_t m = letters.size();
  LinComb<Tensor2> out;
  for (std::size_t i = 0; i <= m; ++i)
    out.add(Tensor2{{word(letters, 0, i), word(letters, i, m)}}, -Coefficient::lambda());
  for (std::size_t i = 1; i <= m; ++i)
    out.add(Tensor2{{word(letters, 0, i - 1), word(letters, i, m)}}, Coefficient::mu());
  return out;
}

}  // namespace

TEST_SUITE("coalgebra") {
  TEST_CASE("coproduct examples") {
    auto unit = lin2({{"-l", {"1", "1"}}});
    CHECK(coproduct_rec(Forest()) == unit);
    CHECK(coproduct_biideal(Forest()) == unit);

    auto ax = lin2({{"m", {"x", "1"}},
                    {"m", {"1", "alpha"}},
                    {"-l", {"alpha[x]", "1"}},
                    {"-l", {"x", "alpha"}},
                    {"-l", {"1", "alpha[x]"}}});
    CHECK(coproduct_rec(F("alpha[x]")) == ax);
    CHECK(coproduct_biideal(F("alpha[x]")) == ax);

    auto yax = lin2({{"m", {"y x", "1"}},
                     {"m", {"y", "alpha"}},
                     {"m", {"1", "alpha[x]"}},
                     {"-l", {"y alpha[x]", "1"}},
                     {"-l", {"y x", "alpha"}},
                     {"-l", {"y", "alpha[x]"}},
                     {"-l", {"1", "y alpha[x]"}}});
    CHECK(coproduct_rec(F("y alpha[x]")) == yax);
    CHECK(coproduct_biideal(F("y alpha[x]")) == yax);
  }

  TEST_CASE("words of points") {
    const Alphabet xy({"a"}, {"x", "y"});
    std::vector<Forest> points{F("x", xy), F("y", xy)};
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t code = 0; code < (1u << m); ++code) {
        std::vector<Forest> letters;
        for (std::size_t i = 0; i < m; ++i) letters.push_back(points[code >> i & 1]);
        auto expected = word_coproduct(letters);
        auto f = word(letters, 0, m);
        REQUIRE(coproduct_biideal(f) == expected);
        REQUIRE(coproduct_rec(f) == expected);
      }
    }
  }

  TEST_CASE("recursive and biideal forms agree") {
    for (const auto& f : enumerate_forests(4, ab())) REQUIRE(coproduct_rec(f) == coproduct_biideal(f));
  }

  TEST_CASE("grading of terms") {
    for (const auto& f : enumerate_forests(5, ab())) {
      const auto n = f.nvertices();
      for (const auto& [t, c] : coproduct_biideal(f)) {
        auto split = t.legs[0].nvertices() + t.legs[1].nvertices();
        REQUIRE(c.terms().size() == 1);
        const auto& mono = c.terms()[0].first;
        if (split == n) {
          REQUIRE(mono == Monomial{1, 0, 0});
        } else {
          REQUIRE(split + 1 == n);
          REQUIRE(mono == Monomial{0, 1, 0});
        }
      }
    }
  }

  TEST_CASE("linear extension") {
    CHECK(coproduct(LinComb<Forest>()).is_zero());
    auto f = F("alpha[beta x]");
    auto q = C("3/2 - l*n");
    CHECK(coproduct(LinComb<Forest>(f, q)) == q * coproduct_biideal(f));
    auto twice = coproduct(lin({{"1", "x"}, {"1", "alpha"}}));
    CHECK(twice == coproduct_biideal(F("x")) + coproduct_biideal(F("alpha")));
  }

  TEST_CASE("iterated coproduct of the unit") {
    auto d = coproduct_biideal(Forest());
    LinComb<Tensor3> expected(Tensor3{{Forest(), Forest(), Forest()}}, C("l^2"));
    CHECK(coproduct_left(d) == expected);
    CHECK(coproduct_right(d) == expected);
  }

  TEST_CASE("coassociativity on small forests") {
    for (const auto& f : enumerate_forests(3, ab())) {
      auto d = coproduct_biideal(f);
      REQUIRE(coproduct_left(d) == coproduct_right(d));
    }
  }

  TEST_CASE("counit") {
    CHECK(counit(Forest()) == C("-l^-1"));
    CHECK(counit(F("x")) == C("-m*l^-2"));
    CHECK(counit(lin({{"2", "x"}, {"l", "alpha"}})) == C("-2*m*l^-2 - m*l^-1"));
    for (const auto& f : forests_of_size(3, ab())) {
      auto at_minus_one = Coefficient(counit(f)).eval_partial(Rational(-1), std::nullopt, std::nullopt);
      CHECK(at_minus_one == C("-m^3"));
    }
    for (const auto& f : enumerate_forests(3, ab())) {
      auto d = coproduct_biideal(f);
      REQUIRE(counit_left(d) == single(f));
      REQUIRE(counit_right(d) == single(f));
    }
  }
}
