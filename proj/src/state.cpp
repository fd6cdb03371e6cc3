#include "qtorus/state.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "qtorus/errors.hpp"
#include "qtorus/integers.hpp"

namespace qtorus {

IntegerAmplitudes integerize(const std::vector<Rational>& alphas) {
    bool any_nonzero = false;
    for (const auto& alpha : alphas) {
        if (!alpha.is_zero()) {
            any_nonzero = true;
            break;
        }
    }
    if (!any_nonzero) {
        throw AllZeroAmplitudes("amplitudes are all zero");
    }

    Unbounded scale = 1;
    for (const auto& alpha : alphas) {
        scale = lcm(scale, alpha.den());
    }

    IntegerAmplitudes out;
    out.amps.reserve(alphas.size());
    out.norm_sq = 0;
    for (const auto& alpha : alphas) {
        Unbounded value = alpha.num() * (scale / alpha.den());
        out.norm_sq += value * value;
        out.amps.push_back(std::move(value));
    }
    return out;
}

DiscreteState::DiscreteState(IntegerAmplitudes amplitudes, SpectrumPtr spectrum, Unbounded step)
    : amplitudes_(std::move(amplitudes)), spectrum_(std::move(spectrum)), step_(std::move(step)) {
    if (!spectrum_) {
        throw SpectrumMismatch("state needs a spectrum");
    }
    if (amplitudes_.amps.size() != spectrum_->dimension()) {
        throw DimensionMismatch("state has " + std::to_string(amplitudes_.amps.size()) +
                                " amplitudes for a spectrum of dimension " +
                                std::to_string(spectrum_->dimension()));
    }
    // norm_sq is derived data; recompute so the invariant holds by construction
    Unbounded norm_sq = 0;
    for (const auto& value : amplitudes_.amps) {
        norm_sq += value * value;
    }
    if (norm_sq == 0) {
        throw AllZeroAmplitudes("amplitudes are all zero");
    }
    amplitudes_.norm_sq = std::move(norm_sq);
}

bool same_spectrum(const ReducedSpectrum& a, const ReducedSpectrum& b) {
    return a.offset == b.offset && a.unit_eps == b.unit_eps && a.modulus_N == b.modulus_N &&
           a.p == b.p;
}

namespace {

void require_shared_spectrum(const DiscreteState& s1, const DiscreteState& s2,
                             const char* operation) {
    if (s1.spectrum_ptr() == s2.spectrum_ptr()) {
        return;
    }
    if (!same_spectrum(s1.spectrum(), s2.spectrum())) {
        throw SpectrumMismatch(std::string(operation) + " needs states over the same spectrum");
    }
}

}  // namespace

std::vector<Unbounded> phase_indices(const DiscreteState& state) {
    const auto& spec = state.spectrum();
    std::vector<Unbounded> indices;
    indices.reserve(spec.p.size());
    for (const auto& pk : spec.p) {
        indices.push_back(mod_floor(state.step() * pk, spec.modulus_N));
    }
    return indices;
}

Rational born_eigen(const DiscreteState& state, std::size_t k) {
    const auto& amps = state.amplitudes().amps;
    if (k >= amps.size()) {
        throw IndexOutOfRange("eigenstate index " + std::to_string(k) +
                              " out of range for dimension " + std::to_string(amps.size()));
    }
    return Rational(amps[k] * amps[k], state.amplitudes().norm_sq);
}

GroupRingElement::GroupRingElement(Unbounded modulus) : modulus_(std::move(modulus)) {
    if (modulus_ < 1) {
        throw NonPositiveEntry("group-ring modulus must be positive");
    }
}

GroupRingElement GroupRingElement::from_coeffs(const std::vector<Unbounded>& coeffs) {
    GroupRingElement element{Unbounded(coeffs.size())};
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        element.add(Unbounded(j), coeffs[j]);
    }
    return element;
}

void GroupRingElement::add(const Unbounded& j, const Unbounded& value) {
    if (value == 0) {
        return;
    }
    const Unbounded exponent = mod_floor(j, modulus_);
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, value);
        return;
    }
    it->second += value;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

Unbounded GroupRingElement::coeff(const Unbounded& j) const {
    const auto it = terms_.find(mod_floor(j, modulus_));
    return it == terms_.end() ? Unbounded(0) : it->second;
}

std::vector<Unbounded> GroupRingElement::dense() const {
    if (modulus_ > 100000000) {
        throw CapExceeded("dense coefficient vector of length " + modulus_.str() +
                          " is too large to materialize");
    }
    std::vector<Unbounded> coeffs(modulus_.convert_to<std::size_t>(), Unbounded(0));
    for (const auto& [exponent, value] : terms_) {
        coeffs[exponent.convert_to<std::size_t>()] = value;
    }
    return coeffs;
}

GroupRingElement gr_inner(const DiscreteState& state, const DiscreteState& analysis) {
    require_shared_spectrum(state, analysis, "inner product");
    const auto m_state = phase_indices(state);
    const auto m_analysis = phase_indices(analysis);
    const auto& a_state = state.amplitudes().amps;
    const auto& a_analysis = analysis.amplitudes().amps;

    GroupRingElement inner{state.spectrum().modulus_N};
    for (std::size_t k = 0; k < a_state.size(); ++k) {
        inner.add(m_state[k] - m_analysis[k], a_analysis[k] * a_state[k]);
    }
    return inner;
}

bool strict_equal(const DiscreteState& s1, const DiscreteState& s2) {
    require_shared_spectrum(s1, s2, "state comparison");
    const auto& a1 = s1.amplitudes().amps;
    const auto& a2 = s2.amplitudes().amps;
    if (a1 != a2) {
        return false;
    }
    const auto m1 = phase_indices(s1);
    const auto m2 = phase_indices(s2);
    for (std::size_t k = 0; k < a1.size(); ++k) {
        if (a1[k] != 0 && m1[k] != m2[k]) {
            return false;
        }
    }
    return true;
}

bool ray_equal(const DiscreteState& s1, const DiscreteState& s2) {
    require_shared_spectrum(s1, s2, "state comparison");
    const auto& a1 = s1.amplitudes().amps;
    const auto& a2 = s2.amplitudes().amps;

    std::optional<std::size_t> first_support;
    for (std::size_t k = 0; k < a1.size(); ++k) {
        if ((a1[k] == 0) != (a2[k] == 0)) {
            return false;
        }
        if (a1[k] != 0 && !first_support) {
            first_support = k;
        }
    }
    const std::size_t k0 = *first_support;  // some amplitude is nonzero by invariant

    const auto m1 = phase_indices(s1);
    const auto m2 = phase_indices(s2);
    const Unbounded& N = s1.spectrum().modulus_N;
    const bool even_modulus = (N % 2 == 0);
    const Unbounded half_turn = N / 2;

    using boost::multiprecision::abs;
    std::optional<Unbounded> shift;
    for (std::size_t k = 0; k < a1.size(); ++k) {
        if (a1[k] == 0) {
            continue;
        }
        // one scale c for all components: |a2[k]|/|a1[k]| must match k0's ratio
        if (abs(a2[k]) * abs(a1[k0]) != abs(a1[k]) * abs(a2[k0])) {
            return false;
        }
        const bool flip = (a1[k] < 0) != (a2[k] < 0);
        if (flip && !even_modulus) {
            throw OddModulusSignFlip("amplitude sign flip is the half-turn phase N/2, but N = " +
                                     N.str() + " is odd");
        }
        Unbounded j = mod_floor(m2[k] - m1[k] + (flip ? half_turn : Unbounded(0)), N);
        if (!shift) {
            shift = std::move(j);
        } else if (*shift != j) {
            return false;
        }
    }
    return true;
}

namespace {

Unbounded parse_step_count(const std::string& token) {
    const Rational value = Rational::parse(token);
    if (!value.is_integer()) {
        throw ParseError("step count must be an integer, got '" + token + "'");
    }
    return value.num();
}

}  // namespace

StateFile parse_state_lines(const std::string& text) {
    StateFile file;
    file.step = 0;

    bool header_seen = false;
    bool step_seen = false;
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
        if (!header_seen) {
            if (token != "amps:") {
                throw ParseError("state file must begin with an 'amps:' line");
            }
            header_seen = true;
            continue;
        }
        if (token.rfind("step:", 0) == 0) {
            if (step_seen) {
                throw ParseError("state file has more than one step line");
            }
            step_seen = true;
            file.step = parse_step_count(token.substr(5));
            continue;
        }
        if (step_seen) {
            throw ParseError("amplitudes after the step line");
        }
        file.alphas.push_back(Rational::parse(token));
    }
    if (!header_seen) {
        throw ParseError("state file must begin with an 'amps:' line");
    }
    if (file.alphas.empty()) {
        throw ParseError("state file lists no amplitudes");
    }
    return file;
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open state file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_lines(buffer.str());
}

DiscreteState bind_state(const StateFile& file, SpectrumPtr spectrum) {
    return DiscreteState(integerize(file.alphas), std::move(spectrum), file.step);
}

}  // namespace qtorus
