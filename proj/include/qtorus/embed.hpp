#pragma once

#include <optional>

#include "qtorus/rational.hpp"
#include "qtorus/state.hpp"

namespace qtorus {

// Floating image of an exact quantity plus a radius bounding the distance to
// the true value.
struct ComplexInterval {
    double re;
    double im;
    double radius;
};

// Numeric image sum_j c_j * e^{-2*pi*i*j/N}, evaluated at the requested
// working precision in bits (values below 53 are raised to 53) and returned
// as doubles with an error radius covering both the working rounding and the
// final double conversion.  Raising the precision shrinks the radius until
// the double conversion dominates.
ComplexInterval embed(const GroupRingElement& element, unsigned precision);

struct ProbabilityInterval {
    double value;   // in [0, 1]
    double radius;
    std::optional<Rational> exact;  // set when the probability is exactly known
};

// Born probability |<analysis|state>|^2 / (norm_sq_state * norm_sq_analysis).
// Exact whenever the inner product has at most one nonzero coefficient, or
// the roots of unity are themselves rational (N <= 2); numeric via embed
// otherwise.
ProbabilityInterval born(const DiscreteState& state, const DiscreteState& analysis,
                         unsigned precision);

}  // namespace qtorus
