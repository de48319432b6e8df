#include "pdmosc/dho_core.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmosc {

namespace detail {

// Both helpers are entire functions of z = mu t^2:
//   cosh_like  = sum z^k / (2k)!        = cosh(beta t) or cos(w t)
//   sinhc_like = t * sum z^k / (2k+1)!  = sinh(beta t)/beta or sin(w t)/w
// The series branch covers |z| < 0.5 (12 terms reach full double precision),
// which includes the critical-damping limit z -> 0.

double cosh_like(double mu, double t) {
    const double z = mu * t * t;
    if (std::abs(z) < 0.5) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k <= 12; ++k) {
            term *= z / ((2.0 * k - 1.0) * (2.0 * k));
            sum += term;
        }
        return sum;
    }
    if (mu > 0.0)
        return std::cosh(std::sqrt(mu) * t);
    return std::cos(std::sqrt(-mu) * t);
}

double sinhc_like(double mu, double t) {
    const double z = mu * t * t;
    if (std::abs(z) < 0.5) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k <= 12; ++k) {
            term *= z / ((2.0 * k) * (2.0 * k + 1.0));
            sum += term;
        }
        return t * sum;
    }
    if (mu > 0.0) {
        const double b = std::sqrt(mu);
        return std::sinh(b * t) / b;
    }
    const double w = std::sqrt(-mu);
    return std::sin(w * t) / w;
}

} // namespace detail

DhoParams::DhoParams(double omega0, double eta, double m0)
    : omega0_(omega0), eta_(eta), m0_(m0) {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("omega0 must be positive");
    if (!(eta >= 0.0))
        throw std::invalid_argument("eta must be non-negative");
    if (!(m0 > 0.0))
        throw std::invalid_argument("m0 must be positive");
    mu_ = omega0 * omega0 * (eta * eta - 1.0);
    beta_ = omega0 * std::sqrt(std::abs(eta * eta - 1.0));
}

DhoParams DhoParams::from_damping_coefficient(double omega0, double b, double m0) {
    if (!(b >= 0.0))
        throw std::invalid_argument("damping coefficient must be non-negative");
    return DhoParams(omega0, b / (2.0 * m0 * omega0), m0);
}

DampingRegime DhoParams::regime() const {
    if (std::abs(eta_ - 1.0) <= 1e-12)
        return DampingRegime::Critical;
    return eta_ < 1.0 ? DampingRegime::Under : DampingRegime::Over;
}

double DhoParams::damped_frequency() const {
    if (regime() != DampingRegime::Under)
        return 0.0;
    return omega0_ * std::sqrt(1.0 - eta_ * eta_);
}

RegimeInfo classify_damping(const DhoParams& params) {
    return {params.regime(), params.beta(), params.damped_frequency()};
}

AmplitudeVector::AmplitudeVector(Vec a) : A(std::move(a)) {
    if (A.empty())
        throw std::invalid_argument("amplitude vector must not be empty");
    if (norm() == 0.0)
        throw std::invalid_argument("amplitude vector must not be all zero");
}

AmplitudeVector::AmplitudeVector(Vec a, Vec b) : AmplitudeVector(std::move(a)) {
    if (b.size() != A.size())
        throw std::invalid_argument("B must have the same dimension as A");
    B = std::move(b);
}

double AmplitudeVector::norm() const {
    double s = 0.0;
    for (double a : A)
        s += a * a;
    return std::sqrt(s);
}

ReferenceState reference_solution(const DhoParams& params, const AmplitudeVector& amps,
                                  double t, SolutionForm form) {
    const std::size_t n = amps.dimension();
    const double w0 = params.omega0();
    const double a = params.eta() * w0;  // decay rate
    const double mu = params.mu();
    const double envelope = std::exp(-a * t);
    const double C = detail::cosh_like(mu, t);
    const double S = detail::sinhc_like(mu, t);

    ReferenceState out;
    out.q.resize(n);
    out.qdot.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double Ai = amps.A[i];
        double Bi = 0.0;
        if (amps.B)
            Bi = (*amps.B)[i];
        else if (form == SolutionForm::IcConsistent)
            Bi = a * Ai;
        if (params.eta() == 0.0 && amps.phase != 0.0) {
            // q = A cos(w0 t + phi), folded into the C/S basis
            Bi = -Ai * w0 * std::sin(amps.phase);
            Ai = Ai * std::cos(amps.phase);
        }
        // q = e^{-at} (A C + B S);  C' = mu S,  S' = C
        out.q[i] = envelope * (Ai * C + Bi * S);
        out.qdot[i] = envelope * (-a * (Ai * C + Bi * S) + Ai * mu * S + Bi * C);
    }
    return out;
}

double reference_energy_rate(const DhoParams& params, const Vec& qdot) {
    double v2 = 0.0;
    for (double v : qdot)
        v2 += v * v;
    return -2.0 * params.eta() * params.omega0() * params.m0() * v2;
}

} // namespace pdmosc
