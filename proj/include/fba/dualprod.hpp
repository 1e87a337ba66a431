#pragma once

#include <vector>

#include "fba/lincomb.hpp"

namespace fba {

/// Bilinear extension of <F, G> = [F == G].
Coefficient pairing(const LinComb<Forest>& x, const LinComb<Forest>& y);
/// Leg-wise Kronecker pairing on the tensor square.
Coefficient pairing(const LinComb<Tensor2>& x, const LinComb<Tensor2>& y);

/// The leftmost root-to-leaf path of G, without its terminal leaf when that
/// leaf is X-decorated. Empty for G = 1.
struct LeftPath {
  std::vector<VertexId> vertices;
};
LeftPath left_path(const Forest& g);

/// F ⋆ G: with F = T_1...T_m and left path v_1..v_n of G, the sum over
/// non-decreasing s: {1..m} -> {0..n} of the forest where each T_i with
/// s(i) = j > 0 becomes a leftmost child of v_j, and those with s(i) = 0 go
/// to the far left. Trees sent to one place keep their relative order.
LinComb<Forest> star(const Forest& f, const Forest& g);
LinComb<Forest> star(const LinComb<Forest>& x, const LinComb<Forest>& y);

/// x ⋆_{l,m} y = -l x⋆y + m sum over every symbol w of (x ⋆ •w) ⋆ y.
LinComb<Forest> star_weighted(const LinComb<Forest>& x, const LinComb<Forest>& y, const Alphabet& alphabet);

}  // namespace fba
