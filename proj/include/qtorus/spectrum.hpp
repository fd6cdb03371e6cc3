#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/rational.hpp"

namespace qtorus {

// Energies of a non-degenerate Hamiltonian, in eigenvalue order.  Input must
// already be sorted: the artifact rejects unsorted data rather than sorting it,
// so that index k in every output matches the caller's eigenstate labels.
class EnergySpectrum {
public:
    explicit EnergySpectrum(std::vector<Rational> energies);

    const std::vector<Rational>& energies() const { return energies_; }
    std::size_t dimension() const { return energies_.size(); }

private:
    std::vector<Rational> energies_;
};

// Discrete data extracted from a commensurable spectrum:
//
//   E_k = offset + unit_eps * p[k]
//
// with p[0] = 0, the nonzero p[k] collectively coprime, and modulus_N their
// least common multiple.  Times are rational multiples of 2*pi ("turns"), so
// the recurrence time 2*pi/eps is stored as the rational 1/eps and the
// timestep as 1/(N*eps); the factor 2*pi stays symbolic and the core never
// touches a transcendental number.
struct ReducedSpectrum {
    Rational offset;
    Rational unit_eps;
    std::vector<Unbounded> p;
    Unbounded modulus_N;
    Rational recur_turns;
    Rational step_turns;

    std::size_t dimension() const { return p.size(); }
};

// Grounds the spectrum at its lowest eigenvalue: returns E_k - E_0.
std::vector<Rational> shift(const EnergySpectrum& spec);

// Extracts (offset, eps, p, N) from an exact spectrum.  For dimension 1 the
// construction is vacuous and the conventional values eps = 1, N = 1, p = (0)
// keep every invariant total.
ReducedSpectrum reduce(const EnergySpectrum& spec);

// Rationalizes measured (floating-point) energies, then reduces.  Returns
// nullopt when some energy gap admits no rational value within tol and
// max_den, i.e. the data is incommensurable as far as the input can tell.
// Gaps that rationalize to coinciding values do not resolve distinct levels
// at this tolerance and are rejected as degenerate.
std::optional<ReducedSpectrum> reduce_floats(const std::vector<double>& values,
                                             double tol, const Unbounded& max_den);

// A spectrum file holds one energy per line (`#` lines are comments).  Lines
// in rational notation ("9", "-3/7") are exact; a line in decimal or
// scientific notation marks the whole file as measured data, to be fed through
// reduce_floats instead of reduce.
struct SpectrumFile {
    std::vector<Rational> exact;  // populated when measured is empty
    std::vector<double> measured; // populated when any line was decimal

    bool is_measured() const { return !measured.empty(); }
};

SpectrumFile parse_spectrum_lines(const std::string& text);
SpectrumFile read_spectrum_file(const std::string& path);

}  // namespace qtorus
