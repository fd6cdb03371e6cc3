#pragma once

#include <optional>

#include "qtorus/rational.hpp"

namespace qtorus {

// Best rational approximation of x with denominator <= max_den, found via
// continued-fraction convergents (and the closing semiconvergent). Returns
// the minimizer of |x - p/q| when that distance is <= tol, otherwise
// nothing: the caller's verdict for an incommensurable input.
//
// x is taken at its exact binary value, and all candidate comparisons are
// exact, so the tol/max_den contract is sharp.
std::optional<Rational> rationalize(double x, double tol, const Unbounded& max_den);

}  // namespace qtorus
