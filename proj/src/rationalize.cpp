#include "qtorus/rationalize.hpp"

#include <cmath>
#include <utility>

namespace qtorus {

std::optional<Rational> rationalize(double x, double tol, const Unbounded& max_den) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw InvalidTolerance("rationalize: tol must be finite and > 0");
    if (max_den < 1) throw InvalidTolerance("rationalize: max_den must be >= 1");
    if (!std::isfinite(x)) return std::nullopt;

    const Rational target = Rational::from_double(x);
    const Rational tol_exact = Rational::from_double(tol);

    // Continued-fraction expansion of the exact dyadic target, with the
    // usual convergent recurrence p_i = a_i p_{i-1} + p_{i-2}.
    Unbounded n = target.num(), d = target.den();
    Unbounded h2 = 0, k2 = 1;  // convergent i-2
    Unbounded h1 = 1, k1 = 0;  // convergent i-1

    std::optional<Rational> best;
    while (true) {
        const Unbounded a = floor_div(n, d);
        Unbounded h = a * h1 + h2;
        Unbounded k = a * k1 + k2;

        if (k > max_den) {
            // k1 >= 1 here: the very first convergent has k = 1 <= max_den.
            // The only remaining candidate is the largest semiconvergent of
            // this step that still fits the bound.
            best = Rational(h1, k1);
            const Unbounded a_fit = (max_den - k2) / k1;
            if (a_fit >= 1) {
                Rational semi(a_fit * h1 + h2, a_fit * k1 + k2);
                if ((target - semi).abs() < (target - *best).abs()) best = std::move(semi);
            }
            break;
        }

        h2 = std::move(h1);
        k2 = std::move(k1);
        h1 = std::move(h);
        k1 = std::move(k);

        Unbounded rem = n - a * d;
        if (rem == 0) {
            best = Rational(h1, k1);  // expansion terminated: h1/k1 == target
            break;
        }
        n = std::move(d);
        d = std::move(rem);
    }

    if ((target - *best).abs() > tol_exact) return std::nullopt;
    return best;
}

}  // namespace qtorus
