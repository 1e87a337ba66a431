#include "fba/lincomb.hpp"

namespace fba {

LinComb<Forest> multiply(const LinComb<Forest>& x, const LinComb<Forest>& y) {
  LinComb<Forest> out;
  for (const auto& [f, cf] : x)
    for (const auto& [g, cg] : y) out.add(concat(f, g), cf * cg);
  return out;
}

LinComb<Forest> graft(Decoration omega, const LinComb<Forest>& x) {
  LinComb<Forest> out;
  for (const auto& [f, c] : x) out.add(graft(omega, f).as_forest(), c);
  return out;
}

LinComb<Tensor2> act_left(const Forest& f, const LinComb<Tensor2>& t) {
  if (f.empty()) return t;
  LinComb<Tensor2> out;
  for (const auto& [b, c] : t) out.add(Tensor2{{concat(f, b.legs[0]), b.legs[1]}}, c);
  return out;
}

LinComb<Tensor2> act_right(const LinComb<Tensor2>& t, const Forest& f) {
  if (f.empty()) return t;
  LinComb<Tensor2> out;
  for (const auto& [b, c] : t) out.add(Tensor2{{b.legs[0], concat(b.legs[1], f)}}, c);
  return out;
}

LinComb<Tensor2> graft_right(Decoration omega, const LinComb<Tensor2>& t) {
  LinComb<Tensor2> out;
  for (const auto& [b, c] : t) out.add(Tensor2{{b.legs[0], graft(omega, b.legs[1]).as_forest()}}, c);
  return out;
}

}  // namespace fba
