#include "qtorus/embed.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "qtorus/integers.hpp"

namespace qtorus {

namespace {

class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(value_, prec);
        mpfr_set_zero(value_, 1);
    }
    ~Real() { mpfr_clear(value_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

private:
    mpfr_t value_;
};

void set_from_unbounded(mpfr_ptr out, const Unbounded& x) {
    mpfr_set_str(out, x.str().c_str(), 10, MPFR_RNDN);
}

}  // namespace

ComplexInterval embed(const GroupRingElement& element, unsigned precision) {
    if (element.is_zero()) {
        return {0.0, 0.0, 0.0};
    }
    const auto prec = static_cast<mpfr_prec_t>(std::max(precision, 53u));

    Real two_pi(prec), modulus(prec), exponent(prec), angle(prec);
    Real cos_v(prec), sin_v(prec), coeff(prec), abs_coeff(prec);
    Real re(prec), im(prec);

    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
    set_from_unbounded(modulus.get(), element.modulus());

    double abs_sum = 0.0;
    for (const auto& [j, value] : element.terms()) {
        set_from_unbounded(exponent.get(), j);
        mpfr_div(angle.get(), exponent.get(), modulus.get(), MPFR_RNDN);
        mpfr_mul(angle.get(), angle.get(), two_pi.get(), MPFR_RNDN);
        mpfr_neg(angle.get(), angle.get(), MPFR_RNDN);
        mpfr_sin_cos(sin_v.get(), cos_v.get(), angle.get(), MPFR_RNDN);

        set_from_unbounded(coeff.get(), value);
        mpfr_fma(re.get(), coeff.get(), cos_v.get(), re.get(), MPFR_RNDN);
        mpfr_fma(im.get(), coeff.get(), sin_v.get(), im.get(), MPFR_RNDN);

        mpfr_abs(abs_coeff.get(), coeff.get(), MPFR_RNDU);
        abs_sum += mpfr_get_d(abs_coeff.get(), MPFR_RNDU);
    }

    const double re_d = mpfr_get_d(re.get(), MPFR_RNDN);
    const double im_d = mpfr_get_d(im.get(), MPFR_RNDN);

    // Working-precision error: per term, the angle construction, sin/cos, the
    // coefficient product, and the running sums each lose O(2^-prec) relative
    // to the coefficient mass; (terms + 40) over-counts the constants.
    const auto terms = static_cast<double>(element.terms().size());
    double radius = abs_sum * (terms + 40.0) * std::ldexp(1.0, 1 - static_cast<int>(prec));
    // final double conversions round once more
    radius += 4.0 * DBL_EPSILON * (std::fabs(re_d) + std::fabs(im_d));
    radius *= 1.0000000001;

    return {re_d, im_d, radius};
}

ProbabilityInterval born(const DiscreteState& state, const DiscreteState& analysis,
                         unsigned precision) {
    const GroupRingElement inner = gr_inner(state, analysis);
    const Unbounded denom = state.amplitudes().norm_sq * analysis.amplitudes().norm_sq;

    std::optional<Rational> exact;
    if (inner.is_zero()) {
        exact = Rational(0);
    } else if (inner.terms().size() == 1) {
        const Unbounded& c = inner.terms().begin()->second;
        exact = Rational(c * c, denom);
    } else if (inner.modulus() == 2) {
        // zeta = -1, so the inner product is the exact integer c_0 - c_1
        const Unbounded z = inner.coeff(Unbounded(0)) - inner.coeff(Unbounded(1));
        exact = Rational(z * z, denom);
    }
    if (exact) {
        const double value = exact->to_double();
        return {value, std::ldexp(std::fabs(value), -50), exact};
    }

    const ComplexInterval z = embed(inner, precision);
    const double denom_d = Rational(denom).to_double();
    const double hyp = std::hypot(z.re, z.im);
    double value = (z.re * z.re + z.im * z.im) / denom_d;
    const double radius =
        ((2.0 * hyp + z.radius) * z.radius / denom_d) * 1.0000000001 + 8.0 * DBL_EPSILON * value;
    value = std::clamp(value, 0.0, 1.0);
    return {value, radius, std::nullopt};
}

}  // namespace qtorus
