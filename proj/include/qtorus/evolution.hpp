#pragma once

#include <string>
#include <vector>

#include "qtorus/state.hpp"

namespace qtorus {

// Default bound on brute-force scans and enumerations; N grows like the lcm
// of D-1 integers, so anything beyond desk scale must be opted into.
inline const Unbounded kDefaultCap = 1000000;

// Advance the step counter; amplitudes never change.  count may be negative,
// evolution is reversible.
DiscreteState step(const DiscreteState& state, const Unbounded& count);

// Random access to the state at absolute step n; phases come out of modular
// multiplication, no iteration involved.
DiscreteState state_at(const DiscreteState& base, const Unbounded& n);

// Smallest n > 0 with state_at(n) equal to state_at(0) as vectors.  Component
// k returns to phase 0 every N/p[k] steps and zero amplitudes carry no phase,
// so this is the lcm of the cycle lengths over the amplitude support (1 for a
// state supported only on p = 0).
Unbounded minimal_period(const DiscreteState& state);

// Checks recurrence at the period, then brute-force scans 0 < n < period for
// an earlier return.  Throws CapExceeded when the period is beyond cap; the
// recurrence itself has been verified at that point, only the minimality scan
// is refused.
bool verify_recurrence(const DiscreteState& state, const Unbounded& cap = kDefaultCap);

enum class Equality { strict, ray };

// Number of pairwise-distinct states over one full period.  The step-to-phase
// map is a group translation, so the count equals the first return time under
// the chosen equality: the period itself for strict vector equality, and the
// first return of the relative phases (against the first supported component)
// for equality of rays.
Unbounded distinct_states(const DiscreteState& state, Equality mode,
                          const Unbounded& cap = kDefaultCap);

struct TrajectoryPoint {
    Unbounded step;
    std::vector<Rational> turns;  // exact m_k/N in [0,1); entry 0 pinned at 0
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
};

// Torus points for steps from .. from+count-1.
Trajectory trajectory(const DiscreteState& state, const Unbounded& from, const Unbounded& count);

// CSV with exact and decimal coordinates; the pinned k = 0 phase is omitted.
std::string trajectory_csv(const Trajectory& traj);

// Unit square with identified edges, the wrapped evolution line, and one dot
// per step.  Two free phases only, i.e. dimension 3.
std::string trajectory_svg(const Trajectory& traj, const ReducedSpectrum& spec);

}  // namespace qtorus
