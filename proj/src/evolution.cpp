#include "qtorus/evolution.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qtorus/errors.hpp"
#include "qtorus/integers.hpp"

namespace qtorus {

DiscreteState step(const DiscreteState& state, const Unbounded& count) {
    return DiscreteState(state.amplitudes(), state.spectrum_ptr(), state.step() + count);
}

DiscreteState state_at(const DiscreteState& base, const Unbounded& n) {
    return DiscreteState(base.amplitudes(), base.spectrum_ptr(), n);
}

Unbounded minimal_period(const DiscreteState& state) {
    const auto& spec = state.spectrum();
    const auto& amps = state.amplitudes().amps;
    std::vector<Unbounded> cycles;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (amps[k] != 0 && spec.p[k] != 0) {
            cycles.push_back(spec.modulus_N / spec.p[k]);  // exact: p[k] divides N
        }
    }
    if (cycles.empty()) {
        return 1;
    }
    return lcm_many(cycles);
}

bool verify_recurrence(const DiscreteState& state, const Unbounded& cap) {
    const Unbounded period = minimal_period(state);

    const auto& spec = state.spectrum();
    const auto& amps = state.amplitudes().amps;
    const auto m_start = phase_indices(state_at(state, 0));
    const auto m_period = phase_indices(state_at(state, period));
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (amps[k] != 0 && m_start[k] != m_period[k]) {
            return false;
        }
    }

    if (period > cap) {
        throw CapExceeded("period " + period.str() + " exceeds the scan cap " + cap.str() +
                          "; recurrence at the period holds, minimality was not scanned");
    }
    if (period > std::numeric_limits<std::uint64_t>::max()) {
        throw CapExceeded("period " + period.str() + " is too large to scan");
    }

    // scan for an earlier return in machine words: supported component k is
    // back at phase 0 exactly when n is a multiple of N/p[k]
    std::vector<std::uint64_t> cycle;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (amps[k] != 0 && spec.p[k] != 0) {
            const Unbounded q = spec.modulus_N / spec.p[k];
            if (q > 1) {
                cycle.push_back(q.convert_to<std::uint64_t>());
            }
        }
    }
    std::vector<std::uint64_t> counter(cycle.size(), 0);

    const auto period_u = period.convert_to<std::uint64_t>();
    for (std::uint64_t n = 1; n < period_u; ++n) {
        bool all_zero = true;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (++counter[i] == cycle[i]) {
                counter[i] = 0;
            }
            if (counter[i] != 0) {
                all_zero = false;
            }
        }
        if (all_zero) {
            return false;  // returned before the computed period
        }
    }
    return true;
}

Unbounded distinct_states(const DiscreteState& state, Equality mode, const Unbounded& cap) {
    const Unbounded period = minimal_period(state);
    if (period > cap) {
        throw CapExceeded("period " + period.str() + " exceeds the enumeration cap " + cap.str());
    }
    if (mode == Equality::strict) {
        return period;
    }

    // rays: quotient out the global phase by measuring every supported
    // component against the first one; the relative phase of component k
    // advances by (p[k] - p[k0]) per step
    const auto& spec = state.spectrum();
    const auto& amps = state.amplitudes().amps;
    std::size_t k0 = 0;
    while (amps[k0] == 0) {
        ++k0;
    }
    std::vector<Unbounded> cycles;
    for (std::size_t k = k0 + 1; k < amps.size(); ++k) {
        if (amps[k] == 0) {
            continue;
        }
        const Unbounded delta = mod_floor(spec.p[k] - spec.p[k0], spec.modulus_N);
        if (delta != 0) {
            cycles.push_back(spec.modulus_N / gcd(spec.modulus_N, delta));
        }
    }
    if (cycles.empty()) {
        return 1;
    }
    return lcm_many(cycles);
}

Trajectory trajectory(const DiscreteState& state, const Unbounded& from, const Unbounded& count) {
    if (count < 1) {
        throw EmptyList("trajectory needs at least one step");
    }
    if (count > 10000000) {
        throw CapExceeded("trajectory of " + count.str() + " points is too large to materialize");
    }
    const auto& spec = state.spectrum();

    Trajectory traj;
    traj.points.reserve(count.convert_to<std::size_t>());
    for (Unbounded n = from; n < from + count; ++n) {
        TrajectoryPoint point;
        point.step = n;
        point.turns.reserve(spec.p.size());
        for (const auto& pk : spec.p) {
            point.turns.emplace_back(mod_floor(n * pk, spec.modulus_N), spec.modulus_N);
        }
        traj.points.push_back(std::move(point));
    }
    return traj;
}

std::string trajectory_csv(const Trajectory& traj) {
    if (traj.points.empty()) {
        throw EmptyList("trajectory has no points");
    }
    const std::size_t dim = traj.points.front().turns.size();

    std::ostringstream out;
    out << "step";
    for (std::size_t k = 1; k < dim; ++k) {
        out << ",theta_" << k << "_frac";
    }
    for (std::size_t k = 1; k < dim; ++k) {
        out << ",theta_" << k << "_dec";
    }
    out << "\n";

    char decimal[32];
    for (const auto& point : traj.points) {
        out << point.step.str();
        for (std::size_t k = 1; k < dim; ++k) {
            out << ',' << point.turns[k].str();
        }
        for (std::size_t k = 1; k < dim; ++k) {
            std::snprintf(decimal, sizeof decimal, "%.12f", point.turns[k].to_double());
            out << ',' << decimal;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

constexpr double kSide = 480.0;
constexpr double kMargin = 40.0;

std::string coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

std::string svg_x(const double turns) { return coord(kMargin + turns * kSide); }
std::string svg_y(const double turns) { return coord(kMargin + (1.0 - turns) * kSide); }

}  // namespace

std::string trajectory_svg(const Trajectory& traj, const ReducedSpectrum& spec) {
    if (traj.points.empty()) {
        throw EmptyList("trajectory has no points");
    }
    if (spec.dimension() != 3 || traj.points.front().turns.size() != 3) {
        throw DimensionUnsupported("torus figure needs exactly two free phases (dimension 3), got " +
                                   std::to_string(spec.dimension()));
    }
    if (spec.p[1] + spec.p[2] > 100000) {
        throw CapExceeded("torus line with more than 100000 segments");
    }

    // The evolution line wraps whenever either phase completes a turn; cutting
    // parameter time t in [0,1] at every i/p1 and j/p2 gives exact segment
    // endpoints with no wrap inside a segment.
    const Rational p1(spec.p[1]);
    const Rational p2(spec.p[2]);
    std::vector<Rational> cuts;
    for (Unbounded i = 0; i <= spec.p[1]; ++i) {
        cuts.push_back(Rational(i) / p1);
    }
    for (Unbounded j = 0; j <= spec.p[2]; ++j) {
        cuts.push_back(Rational(j) / p2);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const int canvas = static_cast<int>(kSide + 2 * kMargin);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\""
        << canvas << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n";
    out << "<rect width=\"" << canvas << "\" height=\"" << canvas << "\" fill=\"#ffffff\"/>\n";

    out << "<g stroke=\"#8aa5c4\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& a = cuts[i];
        const Rational& b = cuts[i + 1];
        const Rational theta1 = (p1 * a).frac();
        const Rational theta2 = (p2 * a).frac();
        const Rational end1 = theta1 + p1 * (b - a);  // reaches at most exactly 1
        const Rational end2 = theta2 + p2 * (b - a);
        out << "<line x1=\"" << svg_x(theta1.to_double()) << "\" y1=\"" << svg_y(theta2.to_double())
            << "\" x2=\"" << svg_x(end1.to_double()) << "\" y2=\"" << svg_y(end2.to_double())
            << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g fill=\"#1f3a5f\">\n";
    for (const auto& point : traj.points) {
        out << "<circle cx=\"" << svg_x(point.turns[1].to_double()) << "\" cy=\""
            << svg_y(point.turns[2].to_double()) << "\" r=\"3.5\"/>\n";
    }
    out << "</g>\n";

    // square last so the border stays on top of wrapped segments; the small
    // arrows mark the edge identifications
    out << "<rect x=\"" << coord(kMargin) << "\" y=\"" << coord(kMargin) << "\" width=\""
        << coord(kSide) << "\" height=\"" << coord(kSide)
        << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
    const std::string mid = coord(kMargin + kSide / 2);
    const std::string top = coord(kMargin);
    const std::string bottom = coord(kMargin + kSide);
    out << "<path d=\"M " << mid << ' ' << top << " l -7 -5 v 10 z\" fill=\"#222222\"/>\n";
    out << "<path d=\"M " << mid << ' ' << bottom << " l -7 -5 v 10 z\" fill=\"#222222\"/>\n";
    out << "<path d=\"M " << top << ' ' << mid << " l -5 7 h 10 z\" fill=\"#222222\"/>\n";
    out << "<path d=\"M " << bottom << ' ' << mid << " l -5 7 h 10 z\" fill=\"#222222\"/>\n";

    out << "<text x=\"" << mid << "\" y=\"" << coord(kMargin + kSide + 28)
        << "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\" "
           "fill=\"#222222\">theta_1 (turns)</text>\n";
    out << "<text x=\"" << coord(kMargin - 22) << "\" y=\"" << mid
        << "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\" "
           "fill=\"#222222\" transform=\"rotate(-90 " << coord(kMargin - 22) << ' ' << mid
        << ")\">theta_2 (turns)</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace qtorus
