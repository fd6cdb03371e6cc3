#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qtorus/continuum.hpp"
#include "qtorus/evolution.hpp"
#include "qtorus/sampling.hpp"

using namespace qtorus;
using qtest::Q;
using qtest::make_spectrum;
using qtest::make_state;

TEST_CASE("at time zero the continuous state is the amplitude vector") {
    auto spec = make_spectrum({"5", "9", "14"});
    const IntegerAmplitudes amps = integerize({Q("3/5"), Q("0"), Q("-4/5")});
    const ContinuousState c = continuous_at(amps, *spec, 0.0);

    REQUIRE(c.components.size() == 3);
    CHECK(c.components[0] == std::complex<double>(3.0, 0.0));
    CHECK(c.components[1] == std::complex<double>(0.0, 0.0));
    CHECK(c.components[2].real() == -4.0);
    CHECK(c.components[2].imag() == 0.0);
    CHECK(c.time_turns == 0.0);
}

TEST_CASE("continuous evolution rejects bad time and shape") {
    auto spec = make_spectrum({"5", "9", "14"});
    const IntegerAmplitudes amps = integerize({Q("1"), Q("1"), Q("1")});
    CHECK_THROWS_AS(continuous_at(amps, *spec, std::nan("")), NonFiniteTime);
    CHECK_THROWS_AS(continuous_at(amps, *spec, INFINITY), NonFiniteTime);

    const IntegerAmplitudes wrong = integerize({Q("1"), Q("1")});
    CHECK_THROWS_AS(continuous_at(wrong, *spec, 0.0), DimensionMismatch);
}

TEST_CASE("one lattice step of continuous time lands on the lattice phases") {
    auto spec = make_spectrum({"5", "9", "14"});  // p = (0, 4, 9), N = 36, eps = 1
    const IntegerAmplitudes amps = integerize({Q("1"), Q("1"), Q("1")});

    const double t1 = lattice_time_turns(*spec, 1);
    CHECK(t1 == doctest::Approx(1.0 / 36.0).epsilon(1e-15));
    const ContinuousState c = continuous_at(amps, *spec, t1);

    // component k sits at angle -2*pi * p_k/36
    const double two_pi = 2.0 * 3.14159265358979323846;
    CHECK(c.components[0].real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.components[1].real() == doctest::Approx(std::cos(two_pi * 4 / 36)).epsilon(1e-14));
    CHECK(c.components[1].imag() == doctest::Approx(-std::sin(two_pi * 4 / 36)).epsilon(1e-14));
    CHECK(c.components[2].real() == doctest::Approx(std::cos(two_pi * 9 / 36)).epsilon(1e-14));
    CHECK(c.components[2].imag() == doctest::Approx(-std::sin(two_pi * 9 / 36)).epsilon(1e-14));

    // a full recurrence is exactly time 1 in turns here
    CHECK(lattice_time_turns(*spec, 36) == 1.0);
}

TEST_CASE("phase reduction keeps whole turns exact even at large times") {
    auto spec = make_spectrum({"5", "9", "14"});  // integer rates, eps = 1
    const IntegerAmplitudes amps = integerize({Q("1"), Q("2"), Q("-1")});

    // an exact power of two of whole turns: rate * t is an exact double, the
    // reduction strips it completely and the state returns to rest
    const ContinuousState c = continuous_at(amps, *spec, 1048576.0);
    CHECK(c.components[0] == std::complex<double>(1.0, 0.0));
    CHECK(c.components[1].real() == 2.0);
    CHECK(c.components[1].imag() == 0.0);
    CHECK(c.components[2].real() == -1.0);
    CHECK(c.components[2].imag() == 0.0);
}

TEST_CASE("continuous evolution preserves the norm at every time") {
    Sampler sampler(5001);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = sampler.uniform(1, 8);
        auto spec = qtest::share(reduce(random_commensurable_spectrum(sampler, dim, 30)));
        const IntegerAmplitudes amps = integerize(random_amplitudes(sampler, dim, false));
        const double norm_ref = Rational(amps.norm_sq).to_double();

        for (int i = 0; i < 50; ++i) {
            const double t = (static_cast<double>(sampler.uniform(0, 2000000)) - 1000000.0) / 977.0;
            const ContinuousState c = continuous_at(amps, *spec, t);
            double norm = 0.0;
            for (const auto& z : c.components) {
                norm += std::norm(z);
            }
            REQUIRE(norm == doctest::Approx(norm_ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("fidelity is one on the lattice and dips between recurrences") {
    auto spec = make_spectrum({"5", "9", "14"});
    const IntegerAmplitudes amps = integerize({Q("1"), Q("1"), Q("1")});
    const DiscreteState at0(amps, spec, 0);

    // exactly on lattice steps the two evolutions coincide as rays
    for (int n = 0; n <= 36; ++n) {
        const DiscreteState d(amps, spec, n);
        const ContinuousState c = continuous_at(amps, *spec, lattice_time_turns(*spec, n));
        REQUIRE(fidelity(d, c) >= 1.0 - 1e-12);
    }
    CHECK(fidelity(at0, continuous_at(amps, *spec, 0.0)) >= 1.0 - 1e-15);

    // halfway between steps the continuous state has moved off the lattice
    const double half_step = lattice_time_turns(*spec, 1) / 2.0;
    const double f_half = fidelity(at0, continuous_at(amps, *spec, half_step));
    CHECK(f_half < 1.0 - 1e-3);
    CHECK(f_half == doctest::Approx(0.900690).epsilon(1e-4));

    // at half the recurrence time the odd component is inverted: overlap
    // (1 + 1 - 1)/3 in amplitude, 1/9 in probability
    const double f_mid = fidelity(at0, continuous_at(amps, *spec, 0.5));
    CHECK(f_mid == doctest::Approx(1.0 / 9.0).epsilon(1e-9));

    // a full continuous recurrence returns to the start
    const double f_full = fidelity(at0, continuous_at(amps, *spec, 1.0));
    CHECK(f_full >= 1.0 - 1e-10);

    const ContinuousState short_state{{std::complex<double>(1.0, 0.0)}, 0.0};
    CHECK_THROWS_AS(fidelity(at0, short_state), DimensionMismatch);
}

TEST_CASE("fidelity ignores the amplitude scale of either side") {
    auto spec = make_spectrum({"5", "9", "14"});
    const IntegerAmplitudes one = integerize({Q("1"), Q("1"), Q("1")});
    const IntegerAmplitudes seven = integerize({Q("7"), Q("7"), Q("7")});
    const DiscreteState d(one, spec, 3);

    const double t = lattice_time_turns(*spec, 3);
    const double f_same = fidelity(d, continuous_at(one, *spec, t));
    const double f_scaled = fidelity(d, continuous_at(seven, *spec, t));
    CHECK(f_same >= 1.0 - 1e-12);
    CHECK(f_scaled >= 1.0 - 1e-12);
}

TEST_CASE("lattice deviation stays at rounding level across whole orbits") {
    auto spec = make_spectrum({"5", "9", "14"});

    // an eigenstate only ever picks up a global phase
    const IntegerAmplitudes eigen = integerize({Q("0"), Q("0"), Q("1")});
    std::vector<Unbounded> few{0, 1, 2, 3, 4, 100};
    CHECK(max_lattice_deviation(eigen, spec, few) <= 1e-12);

    // the worked superposition over its full recurrence
    const IntegerAmplitudes sup = integerize({Q("1"), Q("1"), Q("1")});
    std::vector<Unbounded> orbit;
    for (int n = 0; n < 36; ++n) {
        orbit.emplace_back(n);
    }
    CHECK(max_lattice_deviation(sup, spec, orbit) <= 1e-12);

    CHECK_THROWS_AS(max_lattice_deviation(sup, spec, {}), EmptyList);
}

TEST_CASE("lattice deviation is small for random spectra and deep steps") {
    Sampler sampler(5002);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t dim = sampler.uniform(2, 16);
        auto spec = qtest::share(reduce(random_commensurable_spectrum(sampler, dim, 40)));
        const IntegerAmplitudes amps = integerize(random_amplitudes(sampler, dim, false));

        std::vector<Unbounded> sample;
        for (int i = 0; i < 100; ++i) {
            sample.push_back(sampler.uniform_unbounded(0, spec->modulus_N - 1));
        }
        REQUIRE(max_lattice_deviation(amps, spec, sample) <= 1e-10);
    }
}
