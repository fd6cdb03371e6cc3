#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtorus/spectrum.hpp"

namespace qtorus {

// Deterministic sampling: mt19937_64 has a fully specified output sequence,
// and the draws below avoid std::uniform_int_distribution (whose mapping is
// implementation-defined), so a fixed seed reproduces the same corpus on any
// platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // uniform on [lo, hi], both ends included
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    Unbounded uniform_unbounded(const Unbounded& lo, const Unbounded& hi);

    // count distinct values from [lo, hi], sorted ascending
    std::vector<Unbounded> distinct_integers(std::size_t count, std::uint64_t lo,
                                             std::uint64_t hi);

    Rational positive_rational(std::uint64_t num_bound, std::uint64_t den_bound);
    Rational signed_rational(std::uint64_t num_bound, std::uint64_t den_bound);

private:
    std::mt19937_64 rng_;
};

// Commensurable by construction: energies offset + eps * p_k over a sorted
// set of distinct p starting at p_0 = 0, with small rational offset and eps.
EnergySpectrum random_commensurable_spectrum(Sampler& sampler, std::size_t dimension,
                                             std::uint64_t p_bound);

// Small random rational amplitudes; with full_support every entry is nonzero,
// otherwise roughly a quarter of them are zeroed (at least one stays).
std::vector<Rational> random_amplitudes(Sampler& sampler, std::size_t dimension,
                                        bool full_support);

// log10 of a positive integer of any size, good to ~1e-12 relative.
double log10_unbounded(const Unbounded& n);

}  // namespace qtorus
