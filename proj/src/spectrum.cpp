#include "qtorus/spectrum.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "qtorus/errors.hpp"
#include "qtorus/integers.hpp"
#include "qtorus/rationalize.hpp"

namespace qtorus {

EnergySpectrum::EnergySpectrum(std::vector<Rational> energies)
    : energies_(std::move(energies)) {
    if (energies_.empty()) {
        throw EmptyList("spectrum has no energies");
    }
    for (std::size_t k = 1; k < energies_.size(); ++k) {
        if (energies_[k] == energies_[k - 1]) {
            throw DegenerateSpectrum("duplicate eigenvalue " + energies_[k].str() +
                                     " at index " + std::to_string(k));
        }
        if (energies_[k] < energies_[k - 1]) {
            throw UnsortedSpectrum("energies must be strictly increasing; entry " +
                                   std::to_string(k) + " decreases");
        }
    }
}

std::vector<Rational> shift(const EnergySpectrum& spec) {
    const auto& e = spec.energies();
    std::vector<Rational> shifted;
    shifted.reserve(e.size());
    for (const auto& value : e) {
        shifted.push_back(value - e.front());
    }
    return shifted;
}

ReducedSpectrum reduce(const EnergySpectrum& spec) {
    const auto shifted = shift(spec);

    ReducedSpectrum red;
    red.offset = spec.energies().front();
    if (shifted.size() == 1) {
        red.unit_eps = Rational(1);
        red.p = {Unbounded(0)};
        red.modulus_N = 1;
        red.recur_turns = Rational(1);
        red.step_turns = Rational(1);
        return red;
    }

    const std::vector<Rational> gaps(shifted.begin() + 1, shifted.end());
    red.unit_eps = rational_gcd(gaps);

    red.p.reserve(shifted.size());
    red.p.emplace_back(0);
    std::vector<Unbounded> nonzero;
    nonzero.reserve(gaps.size());
    for (const auto& gap : gaps) {
        const Rational ratio = gap / red.unit_eps;
        nonzero.push_back(ratio.num());  // exact integer: unit_eps divides every gap
        red.p.push_back(nonzero.back());
    }

    red.modulus_N = lcm_many(nonzero);
    red.recur_turns = red.unit_eps.reciprocal();
    red.step_turns = red.recur_turns / Rational(red.modulus_N);
    return red;
}

std::optional<ReducedSpectrum> reduce_floats(const std::vector<double>& values,
                                             double tol, const Unbounded& max_den) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvalidTolerance("tolerance must be a positive finite number");
    }
    if (max_den < 1) {
        throw InvalidTolerance("max_den must be at least 1");
    }
    if (values.empty()) {
        throw EmptyList("spectrum has no energies");
    }
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] == values[k - 1]) {
            throw DegenerateSpectrum("duplicate eigenvalue at index " + std::to_string(k));
        }
        if (values[k] < values[k - 1]) {
            throw UnsortedSpectrum("energies must be strictly increasing; entry " +
                                   std::to_string(k) + " decreases");
        }
    }

    std::vector<Rational> energies;
    energies.reserve(values.size());
    if (auto offset = rationalize(values.front(), tol, max_den)) {
        energies.push_back(std::move(*offset));
    } else {
        // The ground energy only sets a global phase; when it has no short
        // rational form, carry the exact binary value of the input double.
        energies.push_back(Rational::from_double(values.front()));
    }

    Rational previous_gap(0);
    for (std::size_t k = 1; k < values.size(); ++k) {
        auto gap = rationalize(values[k] - values.front(), tol, max_den);
        if (!gap) {
            return std::nullopt;
        }
        if (*gap <= previous_gap) {
            throw DegenerateSpectrum("energies at indices " + std::to_string(k - 1) +
                                     " and " + std::to_string(k) +
                                     " coincide within tolerance");
        }
        energies.push_back(energies.front() + *gap);
        previous_gap = std::move(*gap);
    }

    return reduce(EnergySpectrum(std::move(energies)));
}

namespace {

bool looks_decimal(const std::string& token) {
    for (char c : token) {
        if (c == '.' || c == 'e' || c == 'E') {
            return true;
        }
    }
    return false;
}

double token_to_double(const std::string& token) {
    if (token.find('/') != std::string::npos) {
        return Rational::parse(token).to_double();
    }
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ParseError("bad spectrum entry '" + token + "'");
    }
    return value;
}

}  // namespace

SpectrumFile parse_spectrum_lines(const std::string& text) {
    std::vector<std::string> tokens;
    bool measured = false;

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::string token;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                token.push_back(c);
            }
        }
        if (token.empty() || token.front() == '#') {
            continue;
        }
        measured = measured || looks_decimal(token);
        tokens.push_back(std::move(token));
    }
    if (tokens.empty()) {
        throw EmptyList("spectrum file has no entries");
    }

    SpectrumFile file;
    if (measured) {
        file.measured.reserve(tokens.size());
        for (const auto& token : tokens) {
            file.measured.push_back(token_to_double(token));
        }
    } else {
        file.exact.reserve(tokens.size());
        for (const auto& token : tokens) {
            file.exact.push_back(Rational::parse(token));
        }
    }
    return file;
}

SpectrumFile read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open spectrum file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spectrum_lines(buffer.str());
}

}  // namespace qtorus
