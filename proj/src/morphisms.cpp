#include "fba/morphisms.hpp"

#include <stdexcept>

namespace fba {
namespace {

LinComb<Forest> phi_tree(const Tree& t, const Coefficient& p) {
  if (t.root().kind == Kind::x) {
    LinComb<Forest> out(t.as_forest());
    out.add(Forest(), p);
    return out;
  }
  auto below = phi(t.children(), p);
  auto out = graft(t.root(), below);
  below *= p;
  out += below;
  return out;
}

}  // namespace

LinComb<Forest> phi(const Forest& f, const Coefficient& p) {
  LinComb<Forest> out{Forest()};
  for (const auto& t : f.trees()) out = multiply(out, phi_tree(t, p));
  return out;
}

LinComb<Forest> phi(const LinComb<Forest>& x, const Coefficient& p) {
  LinComb<Forest> out;
  for (const auto& [f, c] : x) {
    auto y = phi(f, p);
    y *= c;
    out += y;
  }
  return out;
}

LinComb<Forest> phi_subsets(const Forest& f, const Coefficient& p) {
  const std::size_t n = f.nvertices();
  if (n >= 31) throw std::invalid_argument("phi_subsets: forest too large");
  std::vector<Coefficient> powers{Coefficient(1)};
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * p);
  LinComb<Forest> out;
  std::vector<std::uint8_t> keep(n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::size_t kept = 0;
    for (std::size_t i = 0; i < n; ++i) {
      keep[i] = (bits >> i) & 1u;
      kept += keep[i];
    }
    out.add(restrict_mask(f, keep), powers[n - kept]);
  }
  return out;
}

LinComb<Forest> theta(const LinComb<Forest>& x, const Coefficient& p) {
  LinComb<Forest> out;
  for (const auto& [f, c] : x) out.add(f, c * p.pow(static_cast<std::uint32_t>(f.nvertices())));
  return out;
}

LinComb<Tensor2> phi(const LinComb<Tensor2>& t, const Coefficient& p) {
  LinComb<Tensor2> out;
  for (const auto& [b, c] : t) {
    auto part = tensor(phi(b.legs[0], p), phi(b.legs[1], p));
    part *= c;
    out += part;
  }
  return out;
}

LinComb<Tensor2> theta(const LinComb<Tensor2>& t, const Coefficient& p) {
  LinComb<Tensor2> out;
  for (const auto& [b, c] : t)
    out.add(b, c * p.pow(static_cast<std::uint32_t>(b.legs[0].nvertices() + b.legs[1].nvertices())));
  return out;
}

LinComb<Forest> apply(const MorphismSpec& spec, const LinComb<Forest>& x) {
  return spec.which == MorphismSpec::Which::phi ? phi(x, spec.parameter) : theta(x, spec.parameter);
}

}  // namespace fba
