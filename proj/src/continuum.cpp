#include "qtorus/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qtorus/errors.hpp"

namespace qtorus {

namespace {

std::complex<double> unit_phase(double phase_turns) {
    const double reduced = phase_turns - std::floor(phase_turns);
    const double angle = -2.0 * std::numbers::pi * reduced;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ContinuousState continuous_at(const IntegerAmplitudes& amps, const ReducedSpectrum& spec,
                              double time_turns) {
    if (!std::isfinite(time_turns)) {
        throw NonFiniteTime("evolution time must be finite");
    }
    if (amps.amps.size() != spec.dimension()) {
        throw DimensionMismatch("amplitude count " + std::to_string(amps.amps.size()) +
                                " does not match spectrum dimension " +
                                std::to_string(spec.dimension()));
    }

    ContinuousState out;
    out.time_turns = time_turns;
    out.components.reserve(amps.amps.size());
    for (std::size_t k = 0; k < amps.amps.size(); ++k) {
        const double rate = (Rational(spec.p[k]) * spec.unit_eps).to_double();
        const double amplitude = Rational(amps.amps[k]).to_double();
        out.components.push_back(amplitude * unit_phase(rate * time_turns));
    }
    return out;
}

double lattice_time_turns(const ReducedSpectrum& spec, const Unbounded& n) {
    return (Rational(n) * spec.step_turns).to_double();
}

double fidelity(const DiscreteState& d, const ContinuousState& c) {
    if (c.components.size() != d.dimension()) {
        throw DimensionMismatch("continuous state of dimension " +
                                std::to_string(c.components.size()) +
                                " compared against dimension " + std::to_string(d.dimension()));
    }

    const auto m = phase_indices(d);
    const auto& spec = d.spectrum();
    const auto& amps = d.amplitudes().amps;

    std::complex<double> inner(0.0, 0.0);
    double norm_c = 0.0;
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        const double amplitude = Rational(amps[k]).to_double();
        const std::complex<double> dk =
            amplitude * unit_phase(Rational(m[k], spec.modulus_N).to_double());
        inner += std::conj(c.components[k]) * dk;
        norm_c += std::norm(c.components[k]);
    }
    const double norm_d = Rational(d.amplitudes().norm_sq).to_double();
    if (norm_c == 0.0) {
        throw AllZeroAmplitudes("fidelity against a zero state");
    }
    return std::clamp(std::norm(inner) / (norm_c * norm_d), 0.0, 1.0);
}

double max_lattice_deviation(const IntegerAmplitudes& amps, const SpectrumPtr& spectrum,
                             const std::vector<Unbounded>& sample) {
    if (sample.empty()) {
        throw EmptyList("deviation check needs at least one sampled step");
    }
    double worst = 0.0;
    for (const auto& n : sample) {
        const DiscreteState d(amps, spectrum, n);
        const ContinuousState c = continuous_at(amps, *spectrum, lattice_time_turns(*spectrum, n));
        worst = std::max(worst, 1.0 - fidelity(d, c));
    }
    return worst;
}

}  // namespace qtorus
