#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/evolution.hpp"

namespace qtest {

using namespace qtorus;

inline Rational Q(const char* text) { return Rational::parse(text); }

inline SpectrumPtr share(ReducedSpectrum reduced) {
    return std::make_shared<const ReducedSpectrum>(std::move(reduced));
}

inline SpectrumPtr make_spectrum(std::initializer_list<const char*> energies) {
    std::vector<Rational> values;
    values.reserve(energies.size());
    for (const char* e : energies) {
        values.push_back(Rational::parse(e));
    }
    return share(reduce(EnergySpectrum(std::move(values))));
}

inline DiscreteState make_state(std::initializer_list<const char*> alphas, SpectrumPtr spectrum,
                                long long step = 0) {
    std::vector<Rational> values;
    values.reserve(alphas.size());
    for (const char* a : alphas) {
        values.push_back(Rational::parse(a));
    }
    return DiscreteState(integerize(values), std::move(spectrum), Unbounded(step));
}

}  // namespace qtest
