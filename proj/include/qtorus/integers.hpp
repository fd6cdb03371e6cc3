#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtorus/errors.hpp"

namespace qtorus {

// Unbounded signed integer. Every integer quantity in the library (p_k, N,
// amplitudes, step counters) uses this type; arithmetic never overflows.
using Unbounded = boost::multiprecision::cpp_int;

// Nonnegative greatest common divisor; gcd(0,0) = 0.
inline Unbounded gcd(const Unbounded& a, const Unbounded& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Unbounded lcm(const Unbounded& a, const Unbounded& b) {
    return boost::multiprecision::lcm(a, b);
}

// Least common multiple of a nonempty list of strictly positive integers.
inline Unbounded lcm_many(const std::vector<Unbounded>& xs) {
    if (xs.empty()) throw EmptyList("lcm_many: empty input list");
    Unbounded acc = 1;
    for (const Unbounded& x : xs) {
        if (x <= 0) throw NonPositiveEntry("lcm_many: entries must be > 0, got " + x.str());
        acc = lcm(acc, x);
    }
    return acc;
}

// Least nonnegative residue of a modulo m (m > 0). cpp_int's % follows the
// dividend's sign, so negative steps need the adjustment.
inline Unbounded mod_floor(const Unbounded& a, const Unbounded& m) {
    Unbounded r = a % m;
    if (r < 0) r += m;
    return r;
}

// Floor division (quotient rounded toward -inf), matching the continued
// fraction recurrence for negative arguments.
inline Unbounded floor_div(const Unbounded& a, const Unbounded& b) {
    Unbounded q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace qtorus
