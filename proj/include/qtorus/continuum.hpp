#pragma once

#include <complex>
#include <vector>

#include "qtorus/state.hpp"

namespace qtorus {

struct ContinuousState {
    std::vector<std::complex<double>> components;
    double time_turns;
};

// Ordinary continuous evolution of the same data, evaluated in floating
// point.  Time is in turns (multiples of 2*pi); component k picks up the
// phase e^{-2*pi*i * p[k] * eps * time_turns}.  The phase is reduced mod one
// turn before any trigonometry, so large times do not shed precision inside
// sin/cos.
ContinuousState continuous_at(const IntegerAmplitudes& amps, const ReducedSpectrum& spec,
                              double time_turns);

// Time of lattice step n in turns: the exact rational n * step_turns, rounded
// to double once.
double lattice_time_turns(const ReducedSpectrum& spec, const Unbounded& n);

// |<c|d>|^2 normalized by both norms; 1 exactly when the states agree as rays.
double fidelity(const DiscreteState& d, const ContinuousState& c);

// Worst 1 - fidelity between the discrete state and its continuous image over
// the sampled lattice steps.
double max_lattice_deviation(const IntegerAmplitudes& amps, const SpectrumPtr& spectrum,
                             const std::vector<Unbounded>& sample);

}  // namespace qtorus
