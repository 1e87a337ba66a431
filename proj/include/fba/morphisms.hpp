#pragma once

#include "fba/lincomb.hpp"

namespace fba {

/// Which family and at which parameter: the indeterminate nu by default, or
/// any coefficient (a rational, for numeric checks).
struct MorphismSpec {
  enum class Which { phi, theta } which = Which::phi;
  Coefficient parameter = Coefficient::nu();
};

/// The algebra endomorphism with phi(•x) = •x + p 1 and
/// phi(B+_w(F)) = B+_w(phi F) + p phi F, computed by that recursion.
LinComb<Forest> phi(const Forest& f, const Coefficient& p = Coefficient::nu());
LinComb<Forest> phi(const LinComb<Forest>& x, const Coefficient& p = Coefficient::nu());

/// Sum over all vertex subsets I of p^(n - |I|) F|I.
LinComb<Forest> phi_subsets(const Forest& f, const Coefficient& p = Coefficient::nu());

/// F -> p^n F.
LinComb<Forest> theta(const LinComb<Forest>& x, const Coefficient& p = Coefficient::nu());

/// Applied to both legs.
LinComb<Tensor2> phi(const LinComb<Tensor2>& t, const Coefficient& p = Coefficient::nu());
LinComb<Tensor2> theta(const LinComb<Tensor2>& t, const Coefficient& p = Coefficient::nu());

LinComb<Forest> apply(const MorphismSpec& spec, const LinComb<Forest>& x);

}  // namespace fba
