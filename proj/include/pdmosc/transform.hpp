#ifndef PDMOSC_TRANSFORM_HPP
#define PDMOSC_TRANSFORM_HPP

#include "pdmosc/dho_core.hpp"
#include "pdmosc/profiles.hpp"

#include <utility>

namespace pdmosc {

// Root selector for the singular rational family, whose radius map has two
// real inverses x_pm = (q/2)(-l q pm sqrt(l^2 q^2 + 4)). Plus is the
// sign-preserving branch (forward o inverse = id); Minus is the mirror
// trajectory, the image of -q. Other families ignore the selector.
enum class Branch { Plus, Minus };

// A complete PDM oscillator scenario: which profile, which reference
// oscillator, which solution constants, and the time window of interest.
struct PdmScenario {
    ProfilePair profile;
    DhoParams params;
    AmplitudeVector amps;
    SolutionForm form = SolutionForm::Paper;
    Branch branch = Branch::Plus;
    double t0 = 0.0;
    double t1 = 20.0;

    PdmScenario(ProfilePair p, DhoParams d, AmplitudeVector a)
        : profile(std::move(p)), params(d), amps(std::move(a)) {}

    // Throws on dimension mismatches, l*|A| >= 1 for the n-dim ML family,
    // or an empty time span.
    void validate() const;
};

// q_i = sqrt(Q(r)) x_i with r = |x| (r = x itself for the 1D families).
Vec forward_map(const ProfilePair& profile, const Vec& x);

// Inverse of forward_map; closed forms for the built-in families, a
// safeguarded Newton solve of sqrt(Q(r))r = |q| for custom profiles.
Vec inverse_map(const ProfilePair& profile, const Vec& q, Branch branch = Branch::Plus);

struct PdmState {
    Vec x;
    Vec xdot;
};

// Closed-form PDM trajectory: x(t) = inverse_map(q_ref(t)) and the velocity
// xdot = qdot/sqrt(m(r)) (negated on the Minus branch, whose reference is -q).
PdmState pdm_solution(const PdmScenario& scenario, double t);

} // namespace pdmosc

#endif
