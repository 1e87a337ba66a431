#include "fba/coalgebra.hpp"

namespace fba {
namespace {

const Coefficient& minus_lambda() {
  static const Coefficient c = -Coefficient::lambda();
  return c;
}

const Coefficient& mu() {
  static const Coefficient c = Coefficient::mu();
  return c;
}

LinComb<Tensor2> coproduct_tree(const Tree& t);

LinComb<Tensor2> coproduct_forest(const Forest& f) {
  const Forest unit;
  if (f.empty()) return LinComb<Tensor2>(Tensor2{{unit, unit}}, minus_lambda());
  auto roots = f.root_indices();
  if (roots.size() == 1) return coproduct_tree(f.subtree(0));

  // Δ(T1 F') = T1.Δ(F') + Δ(T1).F' + l T1 ⊗ F'
  auto first = f.subtree(0);
  auto nodes = f.nodes();
  auto rest = Forest::from_nodes(std::vector<Node>(nodes.begin() + roots[1], nodes.end()));
  auto out = act_left(first.as_forest(), coproduct_forest(rest));
  out += act_right(coproduct_tree(first), rest);
  out.add(Tensor2{{first.as_forest(), rest}}, Coefficient::lambda());
  return out;
}

LinComb<Tensor2> coproduct_tree(const Tree& t) {
  const Forest unit;
  const auto& root = t.root();
  if (root.kind == Kind::x) {
    // Δ(•x) = m 1 ⊗ 1 - l (•x ⊗ 1 + 1 ⊗ •x)
    LinComb<Tensor2> out(Tensor2{{unit, unit}}, mu());
    out.add(Tensor2{{t.as_forest(), unit}}, minus_lambda());
    out.add(Tensor2{{unit, t.as_forest()}}, minus_lambda());
    return out;
  }
  // Δ B+(G) = -l B+(G) ⊗ 1 + m G ⊗ 1 + (id ⊗ B+) Δ(G)
  auto below = t.children();
  auto out = graft_right(root, coproduct_forest(below));
  out.add(Tensor2{{t.as_forest(), unit}}, minus_lambda());
  out.add(Tensor2{{below, unit}}, mu());
  return out;
}

}  // namespace

LinComb<Tensor2> coproduct_rec(const Forest& f) { return coproduct_forest(f); }

LinComb<Tensor2> coproduct_biideal(const Forest& f) {
  auto order = postorder(f);
  const std::size_t n = order.size();
  // restricted[k] = (F|I_k, F|J_k)
  std::vector<std::pair<Forest, Forest>> restricted;
  restricted.reserve(n + 1);
  std::vector<std::uint8_t> in_i(n, 0), in_j(n, 1);
  restricted.emplace_back(Forest(), f);
  for (std::size_t k = 1; k <= n; ++k) {
    in_i[order[k - 1]] = 1;
    in_j[order[k - 1]] = 0;
    restricted.emplace_back(restrict_mask(f, in_i), restrict_mask(f, in_j));
  }
  LinComb<Tensor2> out;
  for (std::size_t k = 0; k <= n; ++k)
    out.add(Tensor2{{restricted[k].first, restricted[k].second}}, minus_lambda());
  for (std::size_t k = 1; k <= n; ++k)
    out.add(Tensor2{{restricted[k - 1].first, restricted[k].second}}, mu());
  return out;
}

LinComb<Tensor2> coproduct(const LinComb<Forest>& x) {
  LinComb<Tensor2> out;
  for (const auto& [f, c] : x) {
    auto d = coproduct_biideal(f);
    d *= c;
    out += d;
  }
  return out;
}

LinComb<Tensor3> coproduct_left(const LinComb<Tensor2>& t) {
  LinComb<Tensor3> out;
  for (const auto& [b, c] : t) {
    for (const auto& [d, cd] : coproduct_biideal(b.legs[0]))
      out.add(Tensor3{{d.legs[0], d.legs[1], b.legs[1]}}, c * cd);
  }
  return out;
}

LinComb<Tensor3> coproduct_right(const LinComb<Tensor2>& t) {
  LinComb<Tensor3> out;
  for (const auto& [b, c] : t) {
    for (const auto& [d, cd] : coproduct_biideal(b.legs[1]))
      out.add(Tensor3{{b.legs[0], d.legs[0], d.legs[1]}}, c * cd);
  }
  return out;
}

Coefficient counit(const Forest& f) {
  auto n = static_cast<std::uint32_t>(f.nvertices());
  return Coefficient(Rational(-1), Monomial{-static_cast<std::int32_t>(n) - 1, n, 0});
}

Coefficient counit(const LinComb<Forest>& x) {
  Coefficient out;
  for (const auto& [f, c] : x) out += c * counit(f);
  return out;
}

LinComb<Forest> counit_left(const LinComb<Tensor2>& t) {
  LinComb<Forest> out;
  for (const auto& [b, c] : t) out.add(b.legs[1], c * counit(b.legs[0]));
  return out;
}

LinComb<Forest> counit_right(const LinComb<Tensor2>& t) {
  LinComb<Forest> out;
  for (const auto& [b, c] : t) out.add(b.legs[0], c * counit(b.legs[1]));
  return out;
}

}  // namespace fba
