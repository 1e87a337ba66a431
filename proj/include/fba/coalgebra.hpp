#pragma once

#include "fba/coefficient.hpp"
#include "fba/lincomb.hpp"

namespace fba {

/// The weighted coproduct with symbolic weights lambda, mu, computed from its
/// defining recursion: the unit and X-leaf base cases, the 1-cocycle rule
/// for B+_omega, and the weighted derivation rule for T1 F'.
LinComb<Tensor2> coproduct_rec(const Forest& f);

/// The same coproduct from the biideal chain I_0 ⊂ ... ⊂ I_n:
///   -l * sum_{k=0..n} F|I_k ⊗ F|J_k  +  m * sum_{k=1..n} F|I_{k-1} ⊗ F|J_k
/// where J_k is the complement of I_k.
LinComb<Tensor2> coproduct_biideal(const Forest& f);

/// Linear extension (biideal route).
LinComb<Tensor2> coproduct(const LinComb<Forest>& x);
/// (Δ ⊗ id) and (id ⊗ Δ) on the tensor square.
LinComb<Tensor3> coproduct_left(const LinComb<Tensor2>& t);
LinComb<Tensor3> coproduct_right(const LinComb<Tensor2>& t);

/// -mu^n / lambda^(n+1) with n the vertex count.
Coefficient counit(const Forest& f);
Coefficient counit(const LinComb<Forest>& x);
/// (ε ⊗ id) and (id ⊗ ε).
LinComb<Forest> counit_left(const LinComb<Tensor2>& t);
LinComb<Forest> counit_right(const LinComb<Tensor2>& t);

}  // namespace fba
