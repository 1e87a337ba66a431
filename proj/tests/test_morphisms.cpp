#include <doctest.h>

#include "support.hpp"

using namespace fbatest;

TEST_SUITE("morphisms") {
  TEST_CASE("phi examples") {
    CHECK(phi(F("alpha")) == lin({{"1", "alpha"}, {"n", "1"}}));
    CHECK(phi(F("x")) == lin({{"1", "x"}, {"n", "1"}}));
    CHECK(phi(F("alpha[beta]")) == lin({{"1", "alpha[beta]"}, {"n", "alpha"}, {"n", "beta"}, {"n^2", "1"}}));
    CHECK(phi(F("alpha[beta gamma]")) == lin({{"1", "alpha[beta gamma]"},
                                              {"n", "alpha[beta]"},
                                              {"n", "alpha[gamma]"},
                                              {"n", "beta gamma"},
                                              {"n^2", "alpha"},
                                              {"n^2", "beta"},
                                              {"n^2", "gamma"},
                                              {"n^3", "1"}}));
    CHECK(phi(Forest()) == single(Forest()));
  }

  TEST_CASE("phi over subsets") {
    CHECK(phi_subsets(F("x")) == lin({{"1", "x"}, {"n", "1"}}));
    CHECK(phi_subsets(F("alpha[beta]")) == phi(F("alpha[beta]")));
    CHECK(phi_subsets(Forest()) == single(Forest()));
    for (const auto& f : enumerate_forests(4, ab())) REQUIRE(phi_subsets(f) == phi(f));
  }

  TEST_CASE("phi is multiplicative") {
    auto small = enumerate_forests(2, ab());
    for (const auto& f : small)
      for (const auto& g : small) REQUIRE(phi(concat(f, g)) == multiply(phi(f), phi(g)));
  }

  TEST_CASE("phi with numeric parameters") {
    for (const auto& f : enumerate_forests(3, ab())) {
      REQUIRE(phi(f, Coefficient(0)) == single(f));
      REQUIRE(phi(phi(f, Coefficient::nu()), Coefficient(2)) == phi(f, Coefficient::nu() + Coefficient(2)));
    }
    CHECK(phi(F("alpha[beta]"), Coefficient(Rational(1, 2))) ==
          lin({{"1", "alpha[beta]"}, {"1/2", "alpha"}, {"1/2", "beta"}, {"1/4", "1"}}));
  }

  TEST_CASE("phi on tensors acts on each leg") {
    auto t = lin2({{"l", {"x", "alpha"}}});
    CHECK(phi(t) == tensor(lin({{"l", "x"}, {"l*n", "1"}}), lin({{"1", "alpha"}, {"n", "1"}})));
  }

  TEST_CASE("theta") {
    CHECK(theta(single(Forest())) == single(Forest()));
    CHECK(theta(single(F("x"))) == lin({{"n", "x"}}));
    CHECK(theta(lin({{"2", "alpha[x]"}, {"l", "y"}})) == lin({{"2*n^2", "alpha[x]"}, {"l*n", "y"}}));
    CHECK(theta(single(F("alpha[x]")), Coefficient(3)) == lin({{"9", "alpha[x]"}}));
    auto small = enumerate_forests(3, ab());
    for (const auto& f : small)
      for (const auto& g : small)
        REQUIRE(theta(single(concat(f, g))) == multiply(theta(single(f)), theta(single(g))));
    CHECK(theta(lin2({{"1", {"x", "alpha[x]"}}})) == lin2({{"n^3", {"x", "alpha[x]"}}}));
  }

  TEST_CASE("apply dispatches on the spec") {
    MorphismSpec phi_spec;
    CHECK(apply(phi_spec, single(F("x"))) == phi(F("x")));
    MorphismSpec theta_spec{MorphismSpec::Which::theta, Coefficient(2)};
    CHECK(apply(theta_spec, single(F("x"))) == lin({{"2", "x"}}));
  }
}
