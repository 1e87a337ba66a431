#include <doctest.h>

#include "support.hpp"

using namespace fbatest;

namespace {

LinComb<Forest> associator(const Forest& a, const Forest& b, const Forest& c) {
  return prelie(prelie(single(a), single(b)), single(c)) - prelie(single(a), prelie(single(b), single(c)));
}

}  // namespace

TEST_SUITE("prelie") {
  TEST_CASE("examples") {
    auto expected = lin({{"m", "x alpha"},
                         {"m", "beta x"},
                         {"-l", "x alpha[beta]"},
                         {"-l", "beta x alpha"},
                         {"-l", "alpha[beta] x"}});
    CHECK(prelie(F("x"), F("alpha[beta]")) == expected);
    CHECK(prelie_closed(F("x"), F("alpha[beta]")) == expected);

    auto reverse = lin({{"m", "alpha[beta]"}, {"-l", "x alpha[beta]"}, {"-l", "alpha[beta] x"}});
    CHECK(prelie(F("alpha[beta]"), F("x")) == reverse);
    CHECK(bracket(F("x"), F("alpha[beta]")) == expected - reverse);

    CHECK(prelie(Forest(), F("x")) == lin({{"m", "1"}, {"-2*l", "x"}}));
    CHECK(prelie(Forest(), Forest()) == lin({{"-l", "1"}}));
  }

  TEST_CASE("bracket is antisymmetric") {
    auto small = enumerate_forests(3, ab());
    for (const auto& f : small) {
      REQUIRE(bracket(f, f).is_zero());
      for (const auto& g : small) REQUIRE(bracket(f, g) == -bracket(g, f));
    }
  }

  TEST_CASE("closed form agrees with the sandwich form") {
    auto small = enumerate_forests(3, ab());
    for (const auto& f : small)
      for (const auto& g : small) REQUIRE(prelie_closed(f, g) == prelie(f, g));
  }

  TEST_CASE("term sizes") {
    auto small = enumerate_forests(3, ab());
    for (const auto& f : small)
      for (const auto& g : small)
        for (const auto& [h, c] : prelie(f, g)) {
          REQUIRE(c.terms().size() == 1);
          auto n = f.nvertices() + g.nvertices();
          if (c.terms()[0].first == Monomial{1, 0, 0}) {
            REQUIRE(h.nvertices() == n);
          } else {
            REQUIRE(c.terms()[0].first == Monomial{0, 1, 0});
            REQUIRE(h.nvertices() + 1 == n);
          }
        }
  }

  TEST_CASE("bilinear extension") {
    auto x = lin({{"2", "x"}, {"l", "alpha"}});
    auto y = lin({{"m", "beta[x]"}});
    auto expected = C("2*m") * prelie(F("x"), F("beta[x]")) + C("l*m") * prelie(F("alpha"), F("beta[x]"));
    CHECK(prelie(x, y) == expected);
    CHECK(bracket(x, x).is_zero());
  }

  TEST_CASE("left-symmetric associator on small triples") {
    auto small = enumerate_forests(2, a1());
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small) REQUIRE(associator(a, b, c) == associator(b, a, c));
  }
}
