#ifndef PDMOSC_DYNAMICS_HPP
#define PDMOSC_DYNAMICS_HPP

#include "pdmosc/dho_core.hpp"
#include "pdmosc/profiles.hpp"

namespace pdmosc {

// One point of an n-dimensional phase trajectory.
struct PhaseState {
    double t = 0.0;
    Vec x;
    Vec xdot;
};

// Energy bookkeeping in the x-frame. rayleigh_power is the dissipated power
// -2 eta w0 m0 m(r) sum(xdot^2), i.e. minus twice the Rayleigh function with
// the coefficient the equations of motion actually carry; along any solution
// d(total)/dt = rayleigh_power.
struct EnergyLedger {
    double kinetic = 0.0;        // (1/2) m0 m(r) sum xdot_j^2
    double potential = 0.0;      // (1/2) m0 w0^2 Q(r) sum x_j^2
    double total = 0.0;
    double rayleigh_power = 0.0; // <= 0
};

// The three coefficient functions of the 1D mixed Lienard form
// xddot + f(x) xdot^2 + h(x) xdot + g(x) = 0.
class LienardCoefficients {
public:
    LienardCoefficients(ProfilePair profile, DhoParams params);

    double f(double x) const;  // m'(x) / (2 m(x))
    double h(double x) const;  // 2 eta w0, constant
    double g(double x) const;  // sqrt(Q/m) w0^2 x

private:
    ProfilePair profile_;
    DhoParams params_;
};

// Accelerations of the PDM damped oscillator:
//   xddot_i = -[m'/(2 r m)] x_i sum(xdot_j^2) - 2 eta w0 xdot_i
//             - sqrt(Q/m) w0^2 x_i
// (1D profiles use the signed-x Lienard coefficients, same code path as
// LienardCoefficients).
Vec eom_rhs(const ProfilePair& profile, const DhoParams& params, const PhaseState& s);

// Canonical momenta p_i = m0 m(r) xdot_i.
Vec momentum(const ProfilePair& profile, const PhaseState& s, double m0 = 1.0);

EnergyLedger energy(const ProfilePair& profile, const DhoParams& params,
                    const PhaseState& s);

// H = |p|^2 / (2 m0 m(r)) + V(r); equals energy(...).total when
// p = m0 m(r) xdot.
double hamiltonian(const ProfilePair& profile, const DhoParams& params,
                   const Vec& x, const Vec& p);

} // namespace pdmosc

#endif
