#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtorus/continuum.hpp"
#include "qtorus/embed.hpp"
#include "qtorus/evolution.hpp"
#include "qtorus/sampling.hpp"

using namespace qtorus;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kIncommensurable = 2;
constexpr int kCapExceeded = 3;

// raised when a measured spectrum admits no rational unit; turned into the
// INCOMMENSURABLE verdict and exit code 2 at the top level
struct IncommensurableVerdict {
    double tol;
    std::string max_den;
};

struct Options {
    std::string spectrum_path;
    std::string state_path;
    std::string analysis_path;
    std::string out_path;
    std::string format = "csv";
    double tol = 1e-12;
    std::string max_den = "1000000000";
    unsigned precision = 128;
    std::string steps = "0";
    std::string from = "0";
    std::string count;  // empty: one full recurrence
    std::string cap = "1000000";
    std::uint64_t seed = 1;
    std::uint64_t dim = 3;
    std::string dims = "2,3,4,5,6";
    std::uint64_t bound = 50;
    std::uint64_t trials = 100;
    long long eigen = -1;
};

// integer flags accept plain integers and the shorthand 1e6 style
Unbounded parse_integer_option(const std::string& text, const std::string& name) {
    const std::string complaint = name + " must be an integer, got '" + text + "'";
    try {
        const Rational value = Rational::parse(text);
        if (!value.is_integer()) {
            throw ParseError(complaint);
        }
        return value.num();
    } catch (const ParseError&) {
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || !std::isfinite(value)) {
            throw ParseError(complaint);
        }
        const Rational exact = Rational::from_double(value);
        if (!exact.is_integer()) {
            throw ParseError(complaint);
        }
        return exact.num();
    }
}

std::string fmt(const char* format, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, format, value);
    return buffer;
}

SpectrumPtr load_spectrum(const Options& opt) {
    if (opt.spectrum_path.empty()) {
        throw ParseError("--spectrum is required for this command");
    }
    const SpectrumFile file = read_spectrum_file(opt.spectrum_path);
    if (file.is_measured()) {
        auto reduced = reduce_floats(file.measured, opt.tol,
                                     parse_integer_option(opt.max_den, "--max-den"));
        if (!reduced) {
            throw IncommensurableVerdict{opt.tol, opt.max_den};
        }
        return std::make_shared<const ReducedSpectrum>(std::move(*reduced));
    }
    return std::make_shared<const ReducedSpectrum>(reduce(EnergySpectrum(file.exact)));
}

// the state named by --state, or the all-ones superposition at step 0
DiscreteState load_state(const Options& opt, const SpectrumPtr& spectrum) {
    if (opt.state_path.empty()) {
        const std::vector<Rational> ones(spectrum->dimension(), Rational(1));
        return DiscreteState(integerize(ones), spectrum, 0);
    }
    return bind_state(read_state_file(opt.state_path), spectrum);
}

std::string phase_string(const Unbounded& m, const Unbounded& modulus) {
    return m.str() + "/" + modulus.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        throw Error("cannot write output file '" + opt.out_path + "'");
    }
    out << text;
}

std::string spectrum_report(const ReducedSpectrum& spec, bool measured) {
    std::ostringstream out;
    if (measured) {
        out << "verdict = COMMENSURABLE\n";
    }
    out << "dimension = " << spec.dimension() << "\n";
    out << "offset = " << spec.offset << "\n";
    out << "eps = " << spec.unit_eps << "\n";
    out << "p = (";
    for (std::size_t k = 0; k < spec.p.size(); ++k) {
        out << (k ? ", " : "") << spec.p[k].str();
    }
    out << ")\n";
    out << "N = " << spec.modulus_N.str() << "\n";
    out << "T_recur = " << spec.recur_turns << " turns\n";
    out << "delta_t = " << spec.step_turns << " turns\n";
    return out.str();
}

int cmd_reduce(const Options& opt) {
    if (opt.spectrum_path.empty()) {
        throw ParseError("--spectrum is required for this command");
    }
    const SpectrumFile file = read_spectrum_file(opt.spectrum_path);
    if (file.is_measured()) {
        auto reduced = reduce_floats(file.measured, opt.tol,
                                     parse_integer_option(opt.max_den, "--max-den"));
        if (!reduced) {
            throw IncommensurableVerdict{opt.tol, opt.max_den};
        }
        emit(opt, spectrum_report(*reduced, true));
        return kOk;
    }
    emit(opt, spectrum_report(reduce(EnergySpectrum(file.exact)), false));
    return kOk;
}

int cmd_evolve(const Options& opt) {
    const SpectrumPtr spectrum = load_spectrum(opt);
    const DiscreteState state =
        step(load_state(opt, spectrum), parse_integer_option(opt.steps, "--steps"));
    const auto m = phase_indices(state);

    std::ostringstream out;
    out << "dimension = " << spectrum->dimension() << "\n";
    out << "N = " << spectrum->modulus_N.str() << "\n";
    out << "step = " << state.step().str() << "\n";
    out << "norm_sq = " << state.amplitudes().norm_sq.str() << "\n";
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        out << "k=" << k << " p=" << spectrum->p[k].str()
            << " amp=" << state.amplitudes().amps[k].str()
            << " phase=" << phase_string(m[k], spectrum->modulus_N) << " turns"
            << " prob=" << born_eigen(state, k) << "\n";
    }
    emit(opt, out.str());
    return kOk;
}

int cmd_period(const Options& opt) {
    const SpectrumPtr spectrum = load_spectrum(opt);
    const DiscreteState state = load_state(opt, spectrum);
    const Unbounded cap = parse_integer_option(opt.cap, "--cap");
    if (cap < 1) {
        throw ParseError("--cap must be at least 1");
    }

    std::ostringstream out;
    out << "period = " << minimal_period(state).str() << "\n";
    out << "recurrence_verified = " << (verify_recurrence(state, cap) ? "true" : "false") << "\n";
    out << "distinct_states_strict = " << distinct_states(state, Equality::strict, cap).str()
        << "\n";
    out << "distinct_states_ray = " << distinct_states(state, Equality::ray, cap).str() << "\n";
    emit(opt, out.str());
    return kOk;
}

int cmd_born(const Options& opt) {
    const SpectrumPtr spectrum = load_spectrum(opt);
    const DiscreteState state = load_state(opt, spectrum);

    std::ostringstream out;
    if (!opt.analysis_path.empty()) {
        const DiscreteState analysis = bind_state(read_state_file(opt.analysis_path), spectrum);
        const ProbabilityInterval prob = born(state, analysis, opt.precision);
        if (prob.exact) {
            out << "P = " << *prob.exact << " (exact)\n";
        } else {
            out << "P = " << fmt("%.15e", prob.value) << " +/- " << fmt("%.3e", prob.radius)
                << "\n";
        }
    } else if (opt.eigen >= 0) {
        out << "P(k=" << opt.eigen << ") = "
            << born_eigen(state, static_cast<std::size_t>(opt.eigen)) << "\n";
    } else {
        for (std::size_t k = 0; k < state.dimension(); ++k) {
            out << "P(k=" << k << ") = " << born_eigen(state, k) << "\n";
        }
    }
    emit(opt, out.str());
    return kOk;
}

int cmd_fidelity(const Options& opt) {
    const SpectrumPtr spectrum = load_spectrum(opt);
    const DiscreteState state =
        step(load_state(opt, spectrum), parse_integer_option(opt.steps, "--steps"));

    const Rational t_exact = Rational(state.step()) * spectrum->step_turns;
    const double t = lattice_time_turns(*spectrum, state.step());
    const ContinuousState continuous = continuous_at(state.amplitudes(), *spectrum, t);

    std::ostringstream out;
    out << "step = " << state.step().str() << "\n";
    out << "t = " << t_exact << " turns\n";
    out << "fidelity = " << fmt("%.15f", fidelity(state, continuous)) << " (double precision)\n";
    emit(opt, out.str());
    return kOk;
}

int cmd_torus(const Options& opt) {
    const SpectrumPtr spectrum = load_spectrum(opt);
    const DiscreteState state = load_state(opt, spectrum);
    const Unbounded from = parse_integer_option(opt.from, "--from");
    const Unbounded count = opt.count.empty() ? spectrum->modulus_N
                                              : parse_integer_option(opt.count, "--count");

    const Trajectory traj = trajectory(state, from, count);
    if (opt.format == "csv") {
        emit(opt, trajectory_csv(traj));
    } else if (opt.format == "svg") {
        emit(opt, trajectory_svg(traj, *spectrum));
    } else if (opt.format == "text") {
        std::ostringstream out;
        out << "# step  theta_k (turns)\n";
        for (const auto& point : traj.points) {
            out << point.step.str();
            for (std::size_t k = 1; k < point.turns.size(); ++k) {
                out << ' ' << point.turns[k];
            }
            out << "\n";
        }
        emit(opt, out.str());
    } else {
        throw ParseError("--format must be csv, svg, or text, got '" + opt.format + "'");
    }
    return kOk;
}

int cmd_randspec(const Options& opt) {
    if (opt.dim < 1) {
        throw ParseError("--dim must be at least 1");
    }
    if (opt.bound < 1) {
        throw ParseError("--bound must be at least 1");
    }
    Sampler sampler(opt.seed);
    const EnergySpectrum spec = random_commensurable_spectrum(sampler, opt.dim, opt.bound);
    const ReducedSpectrum reduced = reduce(spec);

    std::ostringstream out;
    out << "# random commensurable spectrum: seed=" << opt.seed << " dim=" << opt.dim
        << " bound=" << opt.bound << "\n";
    out << "# eps=" << reduced.unit_eps << " N=" << reduced.modulus_N.str() << "\n";
    for (const auto& energy : spec.energies()) {
        out << energy << "\n";
    }
    emit(opt, out.str());
    return kOk;
}

int cmd_stats(const Options& opt) {
    if (opt.trials < 1) {
        throw ParseError("--trials must be at least 1");
    }
    std::vector<std::uint64_t> dims;
    std::stringstream list(opt.dims);
    std::string item;
    while (std::getline(list, item, ',')) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw ParseError("--dims must be a comma list of dimensions, got '" + opt.dims + "'");
        }
        if (used != item.size() || value < 2) {
            throw ParseError("--dims entries must be integers >= 2, got '" + item + "'");
        }
        dims.push_back(value);
    }
    if (dims.empty()) {
        throw ParseError("--dims lists no dimensions");
    }

    Sampler sampler(opt.seed);
    std::ostringstream out;
    out << "# modulus growth: seed=" << opt.seed << " bound=" << opt.bound
        << " trials=" << opt.trials << "\n";
    out << "# D min_log10_N median_log10_N max_log10_N\n";
    for (const std::uint64_t d : dims) {
        std::vector<double> logs;
        logs.reserve(opt.trials);
        for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
            // N is the lcm of the D-1 lattice rates; sampling the rates
            // directly keeps the study exactly that, with no renormalization
            // of a shared factor into the energy unit
            std::vector<Unbounded> rates;
            rates.reserve(d - 1);
            for (std::uint64_t i = 0; i + 1 < d; ++i) {
                rates.emplace_back(sampler.uniform(1, opt.bound));
            }
            logs.push_back(log10_unbounded(lcm_many(rates)));
        }
        std::sort(logs.begin(), logs.end());
        const double median = (opt.trials % 2 == 1)
                                  ? logs[opt.trials / 2]
                                  : 0.5 * (logs[opt.trials / 2 - 1] + logs[opt.trials / 2]);
        out << d << ' ' << fmt("%.4f", logs.front()) << ' ' << fmt("%.4f", median) << ' '
            << fmt("%.4f", logs.back()) << "\n";
    }
    emit(opt, out.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator for finite quantum systems with commensurable energies"};
    app.require_subcommand(1);

    Options opt;

    auto add_spectrum_flags = [&opt](CLI::App* cmd) {
        cmd->add_option("--spectrum", opt.spectrum_path, "spectrum file, one energy per line");
        cmd->add_option("--tol", opt.tol, "rationalization tolerance for measured spectra")
            ->capture_default_str();
        cmd->add_option("--max-den", opt.max_den, "largest denominator tried on measured spectra")
            ->capture_default_str();
    };
    auto add_state_flag = [&opt](CLI::App* cmd) {
        cmd->add_option("--state", opt.state_path,
                        "state file (defaults to the all-ones superposition)");
    };
    auto add_out_flag = [&opt](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write output here instead of stdout");
    };

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce a spectrum to its phase lattice");
    add_spectrum_flags(reduce_cmd);
    add_out_flag(reduce_cmd);

    CLI::App* evolve_cmd = app.add_subcommand("evolve", "advance a state and report its phases");
    add_spectrum_flags(evolve_cmd);
    add_state_flag(evolve_cmd);
    add_out_flag(evolve_cmd);
    evolve_cmd->add_option("--steps", opt.steps, "steps to advance (may be negative)")
        ->capture_default_str();

    CLI::App* period_cmd =
        app.add_subcommand("period", "recurrence period and distinct-state counts");
    add_spectrum_flags(period_cmd);
    add_state_flag(period_cmd);
    add_out_flag(period_cmd);
    period_cmd->add_option("--cap", opt.cap, "bound on brute-force scans")->capture_default_str();

    CLI::App* born_cmd = app.add_subcommand("born", "measurement probabilities");
    add_spectrum_flags(born_cmd);
    add_state_flag(born_cmd);
    add_out_flag(born_cmd);
    born_cmd->add_option("--eigen", opt.eigen, "report only this energy eigenstate");
    born_cmd->add_option("--analysis", opt.analysis_path,
                         "state file for a general projective outcome");
    born_cmd->add_option("--precision", opt.precision, "working precision in bits")
        ->capture_default_str();

    CLI::App* fidelity_cmd =
        app.add_subcommand("fidelity", "overlap with continuous evolution at the same time");
    add_spectrum_flags(fidelity_cmd);
    add_state_flag(fidelity_cmd);
    add_out_flag(fidelity_cmd);
    fidelity_cmd->add_option("--steps", opt.steps, "lattice step to compare at")
        ->capture_default_str();

    CLI::App* torus_cmd = app.add_subcommand("torus", "phase-torus trajectory as CSV, SVG, or text");
    add_spectrum_flags(torus_cmd);
    add_state_flag(torus_cmd);
    add_out_flag(torus_cmd);
    torus_cmd->add_option("--from", opt.from, "first step")->capture_default_str();
    torus_cmd->add_option("--count", opt.count, "number of steps (default: one full recurrence)");
    torus_cmd->add_option("--format", opt.format, "csv, svg, or text")->capture_default_str();

    CLI::App* randspec_cmd =
        app.add_subcommand("randspec", "generate a random commensurable spectrum file");
    add_out_flag(randspec_cmd);
    randspec_cmd->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
    randspec_cmd->add_option("--dim", opt.dim, "number of energy levels")->capture_default_str();
    randspec_cmd->add_option("--bound", opt.bound, "largest lattice rate p_k")
        ->capture_default_str();

    CLI::App* stats_cmd =
        app.add_subcommand("stats", "growth of the modulus N with dimension");
    add_out_flag(stats_cmd);
    stats_cmd->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
    stats_cmd->add_option("--dims", opt.dims, "comma list of dimensions")->capture_default_str();
    stats_cmd->add_option("--bound", opt.bound, "largest lattice rate p_k")
        ->capture_default_str();
    stats_cmd->add_option("--trials", opt.trials, "spectra per dimension")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (opt.precision < 53) {
            throw ParseError("--precision must be at least 53 bits");
        }
        if (reduce_cmd->parsed()) return cmd_reduce(opt);
        if (evolve_cmd->parsed()) return cmd_evolve(opt);
        if (period_cmd->parsed()) return cmd_period(opt);
        if (born_cmd->parsed()) return cmd_born(opt);
        if (fidelity_cmd->parsed()) return cmd_fidelity(opt);
        if (torus_cmd->parsed()) return cmd_torus(opt);
        if (randspec_cmd->parsed()) return cmd_randspec(opt);
        if (stats_cmd->parsed()) return cmd_stats(opt);
        return kInputError;
    } catch (const IncommensurableVerdict& verdict) {
        std::ostringstream out;
        out << "verdict = INCOMMENSURABLE\n";
        out << "no rational unit fits every energy gap within tol = " << fmt("%g", verdict.tol)
            << " and max_den = " << verdict.max_den << "\n";
        try {
            emit(opt, out.str());
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kInputError;
        }
        return kIncommensurable;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
