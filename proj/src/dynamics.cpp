#include "pdmosc/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pdmosc {

namespace {

double norm(const Vec& v) {
    double s = 0.0;
    for (double c : v)
        s += c * c;
    return std::sqrt(s);
}

double sum_sq(const Vec& v) {
    double s = 0.0;
    for (double c : v)
        s += c * c;
    return s;
}

void check_state(const ProfilePair& profile, const Vec& x, const Vec& xdot) {
    if (static_cast<int>(x.size()) != profile.dimension() || x.size() != xdot.size()) {
        std::ostringstream os;
        os << "phase state dimension (" << x.size() << ", " << xdot.size()
           << ") does not match profile dimension " << profile.dimension();
        throw std::invalid_argument(os.str());
    }
}

double radial_arg(const ProfilePair& profile, const Vec& x) {
    return profile.radial() ? norm(x) : x[0];
}

} // namespace

LienardCoefficients::LienardCoefficients(ProfilePair profile, DhoParams params)
    : profile_(std::move(profile)), params_(params) {
    if (profile_.dimension() != 1)
        throw std::invalid_argument("Lienard coefficients are defined for 1D profiles");
}

double LienardCoefficients::f(double x) const {
    return 0.5 * profile_.mass_deriv(x) / profile_.mass(x);
}

double LienardCoefficients::h(double) const {
    return 2.0 * params_.eta() * params_.omega0();
}

double LienardCoefficients::g(double x) const {
    const double w0 = params_.omega0();
    return profile_.restoring_factor(x) * w0 * w0 * x;
}

Vec eom_rhs(const ProfilePair& profile, const DhoParams& params, const PhaseState& s) {
    check_state(profile, s.x, s.xdot);
    const double w0 = params.omega0();
    const double damping = 2.0 * params.eta() * w0;

    if (!profile.radial()) {
        const double x = s.x[0];
        const double v = s.xdot[0];
        const double f = 0.5 * profile.mass_deriv(x) / profile.mass(x);
        const double g = profile.restoring_factor(x) * w0 * w0 * x;
        return {-f * v * v - damping * v - g};
    }

    const double r = norm(s.x);
    const double slope = profile.radial_mass_slope(r);
    const double restoring = profile.restoring_factor(r) * w0 * w0;
    const double v2 = sum_sq(s.xdot);
    Vec acc(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i)
        acc[i] = -slope * s.x[i] * v2 - damping * s.xdot[i] - restoring * s.x[i];
    return acc;
}

Vec momentum(const ProfilePair& profile, const PhaseState& s, double m0) {
    check_state(profile, s.x, s.xdot);
    const double m = m0 * profile.mass(radial_arg(profile, s.x));
    Vec p(s.xdot.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = m * s.xdot[i];
    return p;
}

EnergyLedger energy(const ProfilePair& profile, const DhoParams& params,
                    const PhaseState& s) {
    check_state(profile, s.x, s.xdot);
    const double r = radial_arg(profile, s.x);
    const double m0 = params.m0();
    const double w0 = params.omega0();
    const double m = profile.mass(r);
    const double v2 = sum_sq(s.xdot);

    EnergyLedger ledger;
    ledger.kinetic = 0.5 * m0 * m * v2;
    ledger.potential = 0.5 * m0 * w0 * w0 * profile.deformation(r) * sum_sq(s.x);
    ledger.total = ledger.kinetic + ledger.potential;
    ledger.rayleigh_power = -2.0 * params.eta() * w0 * m0 * m * v2;
    return ledger;
}

double hamiltonian(const ProfilePair& profile, const DhoParams& params,
                   const Vec& x, const Vec& p) {
    if (x.size() != p.size())
        throw std::invalid_argument("hamiltonian: x and p dimensions differ");
    const double r = radial_arg(profile, x);
    const double m0 = params.m0();
    const double w0 = params.omega0();
    const double m = profile.mass(r);
    return 0.5 * sum_sq(p) / (m0 * m) +
           0.5 * m0 * w0 * w0 * profile.deformation(r) * sum_sq(x);
}

} // namespace pdmosc
