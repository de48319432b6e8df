#ifndef PDMOSC_DHO_CORE_HPP
#define PDMOSC_DHO_CORE_HPP

#include <optional>
#include <vector>

namespace pdmosc {

using Vec = std::vector<double>;

enum class DampingRegime { Under, Critical, Over };

// Which reading of the reference solution to evaluate. Paper keeps only the
// cosh term, q_i = A_i e^{-eta w0 t} cosh(beta t), whose velocity at t = 0 is
// -eta w0 A_i. IcConsistent adds the sinh term with B = eta w0 A so that
// qdot(0) = 0 exactly.
enum class SolutionForm { Paper, IcConsistent };

// Constant-mass oscillator parameters. eta = b/(2 m0 w0) is the damping
// ratio; beta = w0 sqrt(eta^2 - 1) is kept as mu = beta^2 (signed) plus a
// magnitude so every regime evaluates in real arithmetic.
class DhoParams {
public:
    DhoParams(double omega0, double eta, double m0 = 1.0);
    static DhoParams from_damping_coefficient(double omega0, double b, double m0 = 1.0);

    double omega0() const { return omega0_; }
    double eta() const { return eta_; }
    double m0() const { return m0_; }
    double damping_coefficient() const { return 2.0 * m0_ * omega0_ * eta_; }
    // beta^2 = omega0^2 (eta^2 - 1); negative when under-damped.
    double mu() const { return mu_; }
    double beta() const { return beta_; }
    DampingRegime regime() const;
    // omega_d = omega0 sqrt(1 - eta^2); zero outside the under-damped regime.
    double damped_frequency() const;

private:
    double omega0_;
    double eta_;
    double m0_;
    double mu_;
    double beta_;
};

struct RegimeInfo {
    DampingRegime regime;
    double beta;     // magnitude of omega0 sqrt|eta^2 - 1|
    double omega_d;  // damped frequency, under-damped only (else 0)
};

// eta < 1 Under, |eta - 1| <= 1e-12 Critical, eta > 1 Over.
RegimeInfo classify_damping(const DhoParams& params);

// Solution constants of the reference q-frame motion. B, when set, overrides
// the form-implied sinh coefficients (general two-constant solution). The
// phase applies only to the undamped case q = A cos(w0 t + phi).
struct AmplitudeVector {
    Vec A;
    std::optional<Vec> B;
    double phase = 0.0;

    explicit AmplitudeVector(Vec a);
    AmplitudeVector(Vec a, Vec b);

    std::size_t dimension() const { return A.size(); }
    double norm() const;
};

struct ReferenceState {
    Vec q;
    Vec qdot;
};

// Exact solution of qddot + 2 eta w0 qdot + w0^2 q = 0 and its analytic time
// derivative, evaluated with the regime-appropriate real forms (cosh -> cos
// under-damping, series limit at critical damping).
ReferenceState reference_solution(const DhoParams& params, const AmplitudeVector& amps,
                                  double t, SolutionForm form = SolutionForm::Paper);

// dE/dt = -2 eta w0 m0 sum qdot_j^2; <= 0, zero iff eta = 0 or qdot = 0.
double reference_energy_rate(const DhoParams& params, const Vec& qdot);

namespace detail {
// cosh(beta t) and sinh(beta t)/beta for beta = sqrt(mu) with mu of either
// sign (cos / sin/omega when mu < 0); series near mu t^2 = 0 keeps the
// critical limit smooth, so there is no branch glitch at eta = 1.
double cosh_like(double mu, double t);
double sinhc_like(double mu, double t);
} // namespace detail

} // namespace pdmosc

#endif
