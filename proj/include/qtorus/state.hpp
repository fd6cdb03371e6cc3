#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtorus/spectrum.hpp"

namespace qtorus {

// Amplitudes scaled to integers by their least common denominator.  The norm
// is not forced to 1: probabilities divide by norm_sq, so only its constancy
// matters and the representation stays exact.
struct IntegerAmplitudes {
    std::vector<Unbounded> amps;
    Unbounded norm_sq;
};

IntegerAmplitudes integerize(const std::vector<Rational>& alphas);

using SpectrumPtr = std::shared_ptr<const ReducedSpectrum>;

// A state is its integer amplitudes plus a timestep count n; the phase of
// component k is the lattice point (n * p[k]) mod N, in units of turns/N.
// Steps may be negative: evolution is reversible.
class DiscreteState {
public:
    DiscreteState(IntegerAmplitudes amplitudes, SpectrumPtr spectrum, Unbounded step);

    const IntegerAmplitudes& amplitudes() const { return amplitudes_; }
    const ReducedSpectrum& spectrum() const { return *spectrum_; }
    const SpectrumPtr& spectrum_ptr() const { return spectrum_; }
    const Unbounded& step() const { return step_; }
    std::size_t dimension() const { return amplitudes_.amps.size(); }

private:
    IntegerAmplitudes amplitudes_;
    SpectrumPtr spectrum_;
    Unbounded step_;
};

// Two ReducedSpectrum values count as the same physical spectrum when all
// reduced data agree; states loaded separately from one file still compare.
bool same_spectrum(const ReducedSpectrum& a, const ReducedSpectrum& b);

// Lattice phase indices m_k = (n * p[k]) mod N, each in [0, N).
std::vector<Unbounded> phase_indices(const DiscreteState& state);

// Probability of finding the state in energy eigenstate k: amps[k]^2/norm_sq.
// Step-independent, which is the model's statement that amplitudes never move.
Rational born_eigen(const DiscreteState& state, std::size_t k);

// Integer coefficients over Z_N representing sum_j coeffs[j] * zeta^j with
// zeta = e^{-2*pi*i/N}.  Reduced only by zeta^N = 1, never by the cyclotomic
// polynomial, so coefficient equality is not equality of the represented
// algebraic number; elements serve purely as inner-product accumulators.
// Coefficients are stored sparsely: an inner product of D-dimensional states
// has at most D nonzero entries while N can be astronomically large.
class GroupRingElement {
public:
    explicit GroupRingElement(Unbounded modulus);

    static GroupRingElement from_coeffs(const std::vector<Unbounded>& coeffs);

    const Unbounded& modulus() const { return modulus_; }
    void add(const Unbounded& j, const Unbounded& value);
    Unbounded coeff(const Unbounded& j) const;
    const std::map<Unbounded, Unbounded>& terms() const { return terms_; }
    std::vector<Unbounded> dense() const;
    bool is_zero() const { return terms_.empty(); }

private:
    Unbounded modulus_;
    std::map<Unbounded, Unbounded> terms_;  // exponent -> nonzero coefficient
};

// Exact inner product <analysis|state> as a group-ring element: component k
// contributes analysis.amps[k] * state.amps[k] at exponent
// (m_k^state - m_k^analysis) mod N.
GroupRingElement gr_inner(const DiscreteState& state, const DiscreteState& analysis);

// Literal vector equality: same spectrum, identical amplitudes, identical
// phases wherever the amplitude is nonzero.
bool strict_equal(const DiscreteState& s1, const DiscreteState& s2);

// Equality as rays: s2 equals s1 with every phase shifted by one global
// lattice index j and amplitudes scaled by one positive rational c.  An
// amplitude sign flip is the half-turn phase N/2, which exists only for even
// N; with odd N a flip cannot be a lattice phase and is reported as an error
// rather than guessed at.
bool ray_equal(const DiscreteState& s1, const DiscreteState& s2);

// State file: a line `amps:`, one Rational per line after it, then an
// optional `step: <integer>`.  The spectrum is not stored; states bind to one
// at load time.
struct StateFile {
    std::vector<Rational> alphas;
    Unbounded step;
};

StateFile parse_state_lines(const std::string& text);
StateFile read_state_file(const std::string& path);
DiscreteState bind_state(const StateFile& file, SpectrumPtr spectrum);

}  // namespace qtorus
