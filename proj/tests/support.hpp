// Shared helpers for the unit tests.
#pragma once

#include <fba/coalgebra.hpp>
#include <fba/coefficient.hpp>
#include <fba/dualprod.hpp>
#include <fba/error.hpp>
#include <fba/forest.hpp>
#include <fba/lincomb.hpp>
#include <fba/morphisms.hpp>
#include <fba/prelie.hpp>
#include <fba/symbol.hpp>

#include <initializer_list>
#include <string>
#include <utility>

namespace fbatest {

using namespace fba;

// Greek names plus the short names used by the exhaustive suites.
inline const Alphabet& greek() {
  static const Alphabet a({"alpha", "beta", "gamma", "delta", "omega", "a", "b"}, {"x", "y"});
  return a;
}

inline const Alphabet& ab() {
  static const Alphabet a({"a", "b"}, {"x"});
  return a;
}

inline const Alphabet& a1() {
  static const Alphabet a({"a"}, {"x"});
  return a;
}

inline Forest F(std::string_view text, const Alphabet& a = greek()) { return parse_forest(text, a); }

inline Coefficient C(std::string_view text) { return Coefficient::parse(text); }

using Terms = std::initializer_list<std::pair<const char*, const char*>>;
using Terms2 = std::initializer_list<std::pair<const char*, std::pair<const char*, const char*>>>;

// {{"coefficient", "forest"}, ...}; repeated forests accumulate.
inline LinComb<Forest> lin(Terms terms, const Alphabet& a = greek()) {
  LinComb<Forest> out;
  for (const auto& [c, f] : terms) out.add(F(f, a), C(c));
  return out;
}

inline LinComb<Tensor2> lin2(Terms2 terms, const Alphabet& a = greek()) {
  LinComb<Tensor2> out;
  for (const auto& [c, legs] : terms) out.add(Tensor2{{F(legs.first, a), F(legs.second, a)}}, C(c));
  return out;
}

inline LinComb<Forest> single(const Forest& f) { return LinComb<Forest>(f); }

}  // namespace fbatest
