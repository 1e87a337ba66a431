#pragma once

#include "fba/lincomb.hpp"

namespace fba {

/// F1 ⊳ F2 = sum over terms c G⊗H of Δ(F2) of c G F1 H, with Δ taken from
/// its recursive definition.
LinComb<Forest> prelie(const Forest& f1, const Forest& f2);

/// The same product from the biideals of F2:
///   -l sum_k F2|I_k F1 F2|J_k + m sum_k F2|I_{k-1} F1 F2|J_k
LinComb<Forest> prelie_closed(const Forest& f1, const Forest& f2);

/// Bilinear extension of prelie_closed.
LinComb<Forest> prelie(const LinComb<Forest>& x, const LinComb<Forest>& y);

/// F1 ⊳ F2 - F2 ⊳ F1.
LinComb<Forest> bracket(const Forest& f1, const Forest& f2);
LinComb<Forest> bracket(const LinComb<Forest>& x, const LinComb<Forest>& y);

}  // namespace fba
