#include "fba/prelie.hpp"

#include "fba/coalgebra.hpp"

namespace fba {

LinComb<Forest> prelie(const Forest& f1, const Forest& f2) {
  LinComb<Forest> out;
  for (const auto& [t, c] : coproduct_rec(f2)) out.add(concat(concat(t.legs[0], f1), t.legs[1]), c);
  return out;
}

LinComb<Forest> prelie_closed(const Forest& f1, const Forest& f2) {
  auto order = postorder(f2);
  const std::size_t n = order.size();
  std::vector<std::uint8_t> in_i(n, 0), in_j(n, 1);
  Forest prev_i;
  const Coefficient minus_l = -Coefficient::lambda();
  const Coefficient m = Coefficient::mu();
  LinComb<Forest> out;
  out.add(concat(f1, f2), minus_l);
  for (std::size_t k = 1; k <= n; ++k) {
    in_i[order[k - 1]] = 1;
    in_j[order[k - 1]] = 0;
    Forest left = restrict_mask(f2, in_i);
    Forest right = concat(f1, restrict_mask(f2, in_j));
    out.add(concat(left, right), minus_l);
    out.add(concat(prev_i, right), m);
    prev_i = std::move(left);
  }
  return out;
}

LinComb<Forest> prelie(const LinComb<Forest>& x, const LinComb<Forest>& y) {
  LinComb<Forest> out;
  for (const auto& [f1, c1] : x)
    for (const auto& [f2, c2] : y) {
      auto p = prelie_closed(f1, f2);
      p *= c1 * c2;
      out += p;
    }
  return out;
}

LinComb<Forest> bracket(const Forest& f1, const Forest& f2) {
  return prelie_closed(f1, f2) - prelie_closed(f2, f1);
}

LinComb<Forest> bracket(const LinComb<Forest>& x, const LinComb<Forest>& y) { return prelie(x, y) - prelie(y, x); }

}  // namespace fba
