#include "qtorus/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "qtorus/errors.hpp"

namespace qtorus {

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) {
        throw Error("empty sampling range");
    }
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) {  // the full 64-bit range
        return rng_();
    }
    // reject the partial cycle at the bottom so every residue is equally likely
    const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - range + 1) % range;
    while (true) {
        const std::uint64_t draw = rng_();
        if (draw >= threshold) {
            return lo + draw % range;
        }
    }
}

Unbounded Sampler::uniform_unbounded(const Unbounded& lo, const Unbounded& hi) {
    if (lo > hi) {
        throw Error("empty sampling range");
    }
    const Unbounded range = hi - lo + 1;
    const unsigned bits = boost::multiprecision::msb(range) + 1;
    const unsigned chunks = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (chunks - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    while (true) {
        Unbounded value = 0;
        for (unsigned i = 0; i < chunks; ++i) {
            std::uint64_t word = rng_();
            if (i == 0) {
                word &= top_mask;
            }
            value <<= 64;
            value |= word;
        }
        if (value < range) {
            return lo + value;
        }
    }
}

std::vector<Unbounded> Sampler::distinct_integers(std::size_t count, std::uint64_t lo,
                                                  std::uint64_t hi) {
    if (lo > hi || hi - lo + 1 < count) {
        throw Error("range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] cannot supply " + std::to_string(count) + " distinct integers");
    }
    std::set<std::uint64_t> seen;
    while (seen.size() < count) {
        seen.insert(uniform(lo, hi));
    }
    return {seen.begin(), seen.end()};
}

Rational Sampler::positive_rational(std::uint64_t num_bound, std::uint64_t den_bound) {
    return Rational(Unbounded(uniform(1, num_bound)), Unbounded(uniform(1, den_bound)));
}

Rational Sampler::signed_rational(std::uint64_t num_bound, std::uint64_t den_bound) {
    Rational value(Unbounded(uniform(0, num_bound)), Unbounded(uniform(1, den_bound)));
    if (uniform(0, 1) == 1) {
        value = -value;
    }
    return value;
}

EnergySpectrum random_commensurable_spectrum(Sampler& sampler, std::size_t dimension,
                                             std::uint64_t p_bound) {
    if (dimension == 0) {
        throw Error("spectrum dimension must be at least 1");
    }
    const Rational offset = sampler.signed_rational(9, 9);
    const Rational eps = sampler.positive_rational(9, 9);

    std::vector<Rational> energies;
    energies.reserve(dimension);
    energies.push_back(offset);
    if (dimension > 1) {
        for (const auto& pk : sampler.distinct_integers(dimension - 1, 1, p_bound)) {
            energies.push_back(offset + eps * Rational(pk));
        }
    }
    return EnergySpectrum(std::move(energies));
}

std::vector<Rational> random_amplitudes(Sampler& sampler, std::size_t dimension,
                                        bool full_support) {
    std::vector<Rational> alphas;
    alphas.reserve(dimension);
    bool any_nonzero = false;
    for (std::size_t k = 0; k < dimension; ++k) {
        if (!full_support && sampler.uniform(0, 3) == 0) {
            alphas.emplace_back(0);
            continue;
        }
        Rational alpha = sampler.positive_rational(9, 9);
        if (sampler.uniform(0, 1) == 1) {
            alpha = -alpha;
        }
        alphas.push_back(std::move(alpha));
        any_nonzero = true;
    }
    if (!any_nonzero) {
        alphas.back() = Rational(1);
    }
    return alphas;
}

double log10_unbounded(const Unbounded& n) {
    if (n <= 0) {
        throw Error("log10 needs a positive integer");
    }
    const std::string digits = n.str();
    const std::size_t used = std::min<std::size_t>(digits.size(), 17);
    const double lead = std::stod(digits.substr(0, used));
    return std::log10(lead) + static_cast<double>(digits.size() - used);
}

}  // namespace qtorus
