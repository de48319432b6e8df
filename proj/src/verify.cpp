#include "pdmosc/verify.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/numerics.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdmosc {

namespace {

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

std::string describe_worst(double t, std::size_t component, double value) {
    std::ostringstream os;
    os << "worst at t = " << t << ", component " << component << ", value " << value;
    return os.str();
}

} // namespace

CheckReport residual_check(const PdmScenario& scenario, std::size_t grid_points,
                           double threshold) {
    scenario.validate();
    const double h = 1e-4 / scenario.params.omega0();
    const auto grid = uniform_grid(scenario.t0, scenario.t1, grid_points);

    CheckReport rep;
    rep.name = "residual/" + scenario.profile.name();
    rep.threshold = threshold;
    double worst_t = scenario.t0;
    std::size_t worst_c = 0;

    for (double t : grid) {
        const PdmState sol = pdm_solution(scenario, t);
        const PdmState sp1 = pdm_solution(scenario, t + h);
        const PdmState sp2 = pdm_solution(scenario, t + 2.0 * h);
        const PdmState sm1 = pdm_solution(scenario, t - h);
        const PdmState sm2 = pdm_solution(scenario, t - 2.0 * h);
        const Vec rhs = eom_rhs(scenario.profile, scenario.params,
                                PhaseState{t, sol.x, sol.xdot});
        for (std::size_t c = 0; c < sol.x.size(); ++c) {
            const double xdd = (-sp2.x[c] + 16.0 * sp1.x[c] - 30.0 * sol.x[c] +
                                16.0 * sm1.x[c] - sm2.x[c]) /
                               (12.0 * h * h);
            const double res = std::abs(xdd - rhs[c]);
            if (res > rep.metric) {
                rep.metric = res;
                worst_t = t;
                worst_c = c;
            }
        }
    }
    rep.passed = rep.metric <= rep.threshold;
    rep.details = describe_worst(worst_t, worst_c, rep.metric);
    return rep;
}

CheckReport oracle_compare(const PdmScenario& scenario, const IntegratorConfig& cfg,
                           double threshold) {
    scenario.validate();
    const PdmState init = pdm_solution(scenario, scenario.t0);
    const Trajectory traj = integrate(scenario.profile, scenario.params,
                                      PhaseState{scenario.t0, init.x, init.xdot},
                                      scenario.t1, cfg);

    CheckReport rep;
    rep.name = "oracle/" + scenario.profile.name();
    rep.threshold = threshold;
    double worst_t = scenario.t0;
    std::size_t worst_c = 0;

    for (double t : uniform_grid(traj.t_begin(), traj.t_end(), 801)) {
        const PhaseState num = traj.at(t);
        const PdmState ana = pdm_solution(scenario, t);
        for (std::size_t c = 0; c < ana.x.size(); ++c) {
            const double dev = std::abs(num.x[c] - ana.x[c]);
            if (dev > rep.metric) {
                rep.metric = dev;
                worst_t = t;
                worst_c = c;
            }
        }
    }
    if (traj.terminated_early()) {
        rep.passed = false;
        rep.details = "integration terminated early (domain boundary)";
        rep.metric = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.passed = rep.metric <= rep.threshold;
    rep.details = describe_worst(worst_t, worst_c, rep.metric);
    return rep;
}

CheckReport dissipation_check(const PdmScenario& scenario, std::size_t grid_points) {
    scenario.validate();
    const auto grid = uniform_grid(scenario.t0, scenario.t1, grid_points);

    auto energy_at = [&](double t) {
        const PdmState s = pdm_solution(scenario, t);
        return energy(scenario.profile, scenario.params,
                      PhaseState{t, s.x, s.xdot});
    };

    CheckReport rep;
    rep.name = "energy/" + scenario.profile.name();

    if (scenario.params.eta() == 0.0) {
        rep.threshold = 1e-8;
        const double e0 = energy_at(scenario.t0).total;
        double worst_t = scenario.t0;
        for (double t : grid) {
            const double rel = std::abs(energy_at(t).total - e0) / std::abs(e0);
            if (rel > rep.metric) {
                rep.metric = rel;
                worst_t = t;
            }
        }
        rep.passed = rep.metric <= rep.threshold;
        rep.details = describe_worst(worst_t, 0, rep.metric) + " (conservation)";
        return rep;
    }

    // eta > 0: dE/dt must match the dissipated power and E must shrink.
    const double h = 1e-5 / scenario.params.omega0();
    double power_scale = 0.0;
    std::vector<double> totals(grid.size());
    std::vector<double> powers(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const EnergyLedger led = energy_at(grid[i]);
        totals[i] = led.total;
        powers[i] = led.rayleigh_power;
        power_scale = std::max(power_scale, std::abs(led.rayleigh_power));
    }
    double fd_mismatch = 0.0;
    double worst_t = scenario.t0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double de = (energy_at(grid[i] + h).total -
                           energy_at(grid[i] - h).total) / (2.0 * h);
        const double miss = std::abs(de - powers[i]);
        if (miss > fd_mismatch) {
            fd_mismatch = miss;
            worst_t = grid[i];
        }
    }
    double monotone_violation = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        monotone_violation = std::max(monotone_violation, totals[i + 1] - totals[i]);

    const double fd_rel = fd_mismatch / power_scale;
    rep.threshold = 1.0;
    rep.metric = std::max(fd_rel / 1e-5, monotone_violation > 0.0 ? 2.0 : 0.0);
    rep.passed = rep.metric <= rep.threshold;
    std::ostringstream os;
    os << "fd power mismatch " << fd_rel << " (tol 1e-5) at t = " << worst_t
       << "; monotone decrease " << (monotone_violation > 0.0 ? "violated" : "holds");
    rep.details = os.str();
    return rep;
}

CheckReport isochronicity_check(const std::vector<PdmScenario>& scenarios,
                                std::size_t crossings, double threshold) {
    if (scenarios.size() < 2)
        throw std::invalid_argument("isochronicity_check needs at least two scenarios");
    const double omega0 = scenarios.front().params.omega0();
    const double eta = scenarios.front().params.eta();
    for (const PdmScenario& s : scenarios) {
        s.validate();
        if (s.params.regime() != DampingRegime::Under)
            throw std::invalid_argument("isochronicity_check: scenarios must be under-damped");
        if (s.params.omega0() != omega0 || s.params.eta() != eta)
            throw std::invalid_argument("isochronicity_check: scenarios must share omega0 and eta");
    }

    std::vector<std::vector<double>> times;
    for (const PdmScenario& s : scenarios) {
        auto f = [&s](double t) { return pdm_solution(s, t).x[0]; };
        auto tc = locate_sign_changes(f, s.t0, s.t1, 4096, 1e-12);
        if (tc.size() < crossings) {
            std::ostringstream os;
            os << "isochronicity_check: only " << tc.size() << " crossings in ["
               << s.t0 << ", " << s.t1 << "], need " << crossings;
            throw InsufficientCrossings(os.str());
        }
        tc.resize(crossings);
        times.push_back(std::move(tc));
    }

    CheckReport rep;
    rep.name = "isochrony/" + scenarios.front().profile.name();
    rep.threshold = threshold;
    std::size_t worst_k = 0;
    for (std::size_t k = 0; k < crossings; ++k) {
        for (std::size_t i = 0; i < times.size(); ++i)
            for (std::size_t j = i + 1; j < times.size(); ++j) {
                const double dev = std::abs(times[i][k] - times[j][k]);
                if (dev > rep.metric) {
                    rep.metric = dev;
                    worst_k = k;
                }
            }
    }
    rep.passed = rep.metric <= rep.threshold;
    std::ostringstream os;
    os << "max pairwise deviation at crossing " << worst_k << " across "
       << scenarios.size() << " scenarios";
    rep.details = os.str();
    return rep;
}

CheckReport phase_shrink_check(const PdmScenario& scenario, std::size_t samples) {
    scenario.validate();
    if (scenario.params.regime() != DampingRegime::Under || scenario.params.eta() <= 0.0)
        throw std::invalid_argument(
            "phase_shrink_check applies to under-damped scenarios with eta > 0");

    const auto grid = uniform_grid(scenario.t0, scenario.t1, samples);
    const std::size_t n = scenario.amps.dimension();
    std::vector<std::vector<double>> xs(n, std::vector<double>(grid.size()));
    std::vector<std::vector<double>> ps(n, std::vector<double>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const PdmState s = pdm_solution(scenario, grid[i]);
        const Vec p = momentum(scenario.profile, PhaseState{grid[i], s.x, s.xdot},
                               scenario.params.m0());
        for (std::size_t c = 0; c < n; ++c) {
            xs[c][i] = s.x[c];
            ps[c][i] = p[c];
        }
    }

    // Local maxima of |v(t)|, split by which side of the equilibrium the
    // excursion is on. For maps that are asymmetric about the origin
    // (singular rational, Morse) the interleaved |v| peak sequence is not
    // monotone even though every orbit loop lies inside the previous one;
    // the shrinkage observable is the per-side envelope.
    auto side_peaks = [](const std::vector<double>& v) {
        std::array<std::vector<double>, 2> peaks;
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            const double mag = std::abs(v[i]);
            if (mag > std::abs(v[i - 1]) && mag > std::abs(v[i + 1]))
                peaks[v[i] >= 0.0 ? 0 : 1].push_back(mag);
        }
        return peaks;
    };

    CheckReport rep;
    rep.name = "phase/" + scenario.profile.name();
    rep.threshold = 0.0;
    rep.metric = -std::numeric_limits<double>::infinity();
    std::string worst = "all peak sequences decrease";
    std::size_t total_peaks = 0;
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto* series : {&xs[c], &ps[c]}) {
            for (const auto& peaks : side_peaks(*series)) {
                total_peaks += peaks.size();
                for (std::size_t j = 0; j + 1 < peaks.size(); ++j) {
                    const double rel = (peaks[j + 1] - peaks[j]) / peaks[j];
                    if (rel > rep.metric) {
                        rep.metric = rel;
                        std::ostringstream os;
                        os << "peak pair " << j << " of " << (series == &xs[c] ? "|x_" : "|p_")
                           << c << "| changes by " << rel;
                        worst = os.str();
                    }
                }
            }
        }
    }
    if (total_peaks < 2)
        throw InsufficientCrossings("phase_shrink_check: too few peaks in span");

    // final phase radius below the initial one
    auto radius = [&](double t) {
        const PdmState s = pdm_solution(scenario, t);
        const Vec p = momentum(scenario.profile, PhaseState{t, s.x, s.xdot},
                               scenario.params.m0());
        double r2 = 0.0;
        for (std::size_t c = 0; c < n; ++c)
            r2 += s.x[c] * s.x[c] + p[c] * p[c];
        return std::sqrt(r2);
    };
    const double r0 = radius(scenario.t0);
    const double r1 = radius(scenario.t1);
    if ((r1 - r0) / r0 > rep.metric) {
        rep.metric = (r1 - r0) / r0;
        worst = "final phase radius vs initial";
    }

    rep.passed = rep.metric <= rep.threshold;
    rep.details = worst;
    return rep;
}

CheckReport roundtrip_check(const ProfilePair& profile, double lo, double hi,
                            std::size_t grid_points) {
    CheckReport rep;
    rep.name = "roundtrip/" + profile.name();
    rep.threshold = 1.0;
    constexpr double q_tol = 1e-8;
    constexpr double m_tol = 1e-12;

    auto mass_fn = [&profile](double s) { return profile.mass(s); };
    auto def_fn = [&profile](double s) { return profile.deformation(s); };
    auto def_deriv_fn = [&profile](double s) { return profile.deformation_deriv(s); };

    double worst_r = lo;
    std::string kind = "Q from m";
    for (double r : uniform_grid(lo, hi, grid_points)) {
        const double q_closed = profile.deformation(r);
        const double q_rec = deformation_from_mass(mass_fn, r, 1e-12);
        const double rel_q = std::abs(q_rec - q_closed) / std::abs(q_closed);

        const double m_closed = profile.mass(r);
        const double m_rec = mass_from_deformation(def_fn, def_deriv_fn, r);
        const double rel_m = std::abs(m_rec - m_closed) / std::abs(m_closed);

        if (rel_q / q_tol > rep.metric) {
            rep.metric = rel_q / q_tol;
            worst_r = r;
            kind = "Q from m, rel " + std::to_string(rel_q);
        }
        if (rel_m / m_tol > rep.metric) {
            rep.metric = rel_m / m_tol;
            worst_r = r;
            kind = "m from Q, rel " + std::to_string(rel_m);
        }
    }
    rep.passed = rep.metric <= rep.threshold;
    std::ostringstream os;
    os << kind << " at r = " << worst_r;
    rep.details = os.str();
    return rep;
}

namespace {

PdmScenario make_scenario(ProfilePair profile, double eta, Vec amps, double t0,
                          double t1, Branch branch = Branch::Plus) {
    PdmScenario s(std::move(profile), DhoParams(1.0, eta), AmplitudeVector(std::move(amps)));
    s.t0 = t0;
    s.t1 = t1;
    s.branch = branch;
    return s;
}

Vec ndim_amps(double norm_target) {
    const double a = norm_target / std::sqrt(3.0);
    return {a, a, a};
}

std::string label(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void run_labeled(std::vector<CheckReport>& out, CheckReport rep, const std::string& tag) {
    rep.name += "/" + tag;
    out.push_back(std::move(rep));
}

// Residual suite: every family at its figure-caption parameters, restricted
// to spans where the closed form is defined (Morse eta=0 hits the log pole at
// t=pi; under-damped power-law members must keep q > 0).
std::vector<CheckReport> suite_residual() {
    std::vector<CheckReport> out;
    run_labeled(out, residual_check(make_scenario(ProfilePair::uniform(), 0.05, {1.0}, 0.0, 20.0)),
                "eta=0.05");
    for (double eta : {0.0, 0.2, 1.0, 1.5})
        run_labeled(out,
                    residual_check(make_scenario(ProfilePair::mathews_lakshmanan(2.0), eta,
                                                 {1.0}, 0.0, 20.0)),
                    "eta=" + label(eta));
    for (Branch b : {Branch::Plus, Branch::Minus})
        for (double eta : {0.0, 0.2, 1.0, 1.5})
            run_labeled(out,
                        residual_check(make_scenario(ProfilePair::singular_rational(1.0), eta,
                                                     {1.0}, 0.0, 20.0, b)),
                        std::string(b == Branch::Plus ? "plus" : "minus") + "/eta=" + label(eta));
    run_labeled(out,
                residual_check(make_scenario(ProfilePair::morse_exp(1.0), 0.0, {1.0}, 0.0, 2.5)),
                "eta=0(short)");
    for (double eta : {0.2, 1.0, 1.5})
        run_labeled(out,
                    residual_check(make_scenario(ProfilePair::morse_exp(1.0), eta, {1.0}, 0.0, 20.0)),
                    "eta=" + label(eta));
    for (double eta : {0.0, 0.2, 1.0, 1.5})
        run_labeled(out,
                    residual_check(make_scenario(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), eta,
                                                 ndim_amps(0.45), 0.0, 20.0)),
                    "eta=" + label(eta));
    for (double sigma : {-0.5, 2.0}) {
        for (double eta : {1.0, 1.5})
            run_labeled(out,
                        residual_check(make_scenario(ProfilePair::power_law(1.0, sigma, 1), eta,
                                                     {1.0}, 0.0, 20.0)),
                        "sigma=" + label(sigma) + "/eta=" + label(eta));
        for (double eta : {0.0, 0.2})
            run_labeled(out,
                        residual_check(make_scenario(ProfilePair::power_law(1.0, sigma, 1), eta,
                                                     {1.0}, 0.0, 1.4)),
                        "sigma=" + label(sigma) + "/eta=" + label(eta) + "(short)");
    }
    return out;
}

std::vector<CheckReport> suite_oracle() {
    std::vector<CheckReport> out;
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::uniform(), 0.05, {0.9}, 0.0, 20.0)),
                "eta=0.05");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::mathews_lakshmanan(2.0), 0.0, {1.0}, 0.0, 20.0)),
                "eta=0");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::mathews_lakshmanan(2.0), 0.05, {1.0}, 0.0, 20.0)),
                "eta=0.05");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::singular_rational(0.3), 0.05, {1.0}, 0.0, 10.0)),
                "plus/eta=0.05");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::singular_rational(1.0), 1.0, {1.0}, 0.0, 10.0,
                                             Branch::Minus)),
                "minus/eta=1");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::morse_exp(1.0), 0.2, {1.0}, 0.0, 10.0)),
                "eta=0.2");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::morse_exp(1.0), 1.5, {1.0}, 0.0, 10.0)),
                "eta=1.5");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 0.2,
                                             ndim_amps(0.45), 0.0, 20.0)),
                "eta=0.2");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 1.0,
                                             ndim_amps(0.45), 0.0, 20.0)),
                "eta=1");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::power_law(1.0, -0.5, 1), 1.0, {1.0}, 0.0, 8.0)),
                "sigma=-0.5/eta=1");
    run_labeled(out,
                oracle_compare(make_scenario(ProfilePair::power_law(1.0, 2.0, 1), 1.5, {1.0}, 0.0, 10.0)),
                "sigma=2/eta=1.5");
    return out;
}

std::vector<CheckReport> suite_energy() {
    std::vector<CheckReport> out;
    for (double eta : {0.0, 0.05, 1.5}) {
        run_labeled(out,
                    dissipation_check(make_scenario(ProfilePair::uniform(), eta, {1.0}, 0.0, 20.0)),
                    "eta=" + label(eta));
        run_labeled(out,
                    dissipation_check(make_scenario(ProfilePair::mathews_lakshmanan(2.0), eta,
                                                    {1.0}, 0.0, 20.0)),
                    "eta=" + label(eta));
        run_labeled(out,
                    dissipation_check(make_scenario(ProfilePair::singular_rational(1.0), eta,
                                                    {1.0}, 0.0, 20.0)),
                    "plus/eta=" + label(eta));
        run_labeled(out,
                    dissipation_check(make_scenario(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), eta,
                                                    ndim_amps(0.45), 0.0, 20.0)),
                    "eta=" + label(eta));
    }
    run_labeled(out,
                dissipation_check(make_scenario(ProfilePair::singular_rational(1.0), 0.05,
                                                {1.0}, 0.0, 20.0, Branch::Minus)),
                "minus/eta=0.05");
    run_labeled(out,
                dissipation_check(make_scenario(ProfilePair::morse_exp(1.0), 0.0, {1.0}, 0.0, 2.5)),
                "eta=0(short)");
    for (double eta : {0.05, 1.5})
        run_labeled(out,
                    dissipation_check(make_scenario(ProfilePair::morse_exp(1.0), eta, {1.0}, 0.0, 20.0)),
                    "eta=" + label(eta));
    for (double sigma : {-0.5, 2.0}) {
        for (double eta : {0.0, 0.05})
            run_labeled(out,
                        dissipation_check(make_scenario(ProfilePair::power_law(1.0, sigma, 1), eta,
                                                        {1.0}, 0.0, 1.4)),
                        "sigma=" + label(sigma) + "/eta=" + label(eta) + "(short)");
        run_labeled(out,
                    dissipation_check(make_scenario(ProfilePair::power_law(1.0, sigma, 1), 1.5,
                                                    {1.0}, 0.0, 20.0)),
                    "sigma=" + label(sigma) + "/eta=1.5");
    }
    return out;
}

std::vector<CheckReport> suite_isochrony() {
    std::vector<CheckReport> out;
    std::vector<PdmScenario> ml;
    for (double A : {0.5, 0.9})
        for (double l : {0.5, 2.0, 4.0})
            ml.push_back(make_scenario(ProfilePair::mathews_lakshmanan(l), 0.05, {A}, 0.0, 20.0));
    run_labeled(out, isochronicity_check(ml), "A={0.5,0.9} lambda={0.5,2,4}");

    std::vector<PdmScenario> uni;
    for (double A : {1.0, 2.0})
        uni.push_back(make_scenario(ProfilePair::uniform(), 0.05, {A}, 0.0, 20.0));
    run_labeled(out, isochronicity_check(uni), "A={1,2}");

    std::vector<PdmScenario> morse;
    for (double A : {0.5, 0.9})
        morse.push_back(make_scenario(ProfilePair::morse_exp(1.0), 0.05, {A}, 0.0, 20.0));
    run_labeled(out, isochronicity_check(morse), "A={0.5,0.9}");
    return out;
}

std::vector<CheckReport> suite_phase() {
    std::vector<CheckReport> out;
    for (double l : {0.5, 1.0, 2.0, 3.0, 4.0})
        run_labeled(out,
                    phase_shrink_check(make_scenario(ProfilePair::mathews_lakshmanan(l), 0.05,
                                                     {0.9}, 0.0, 20.0)),
                    "lambda=" + label(l));
    for (Branch b : {Branch::Plus, Branch::Minus})
        for (double l : {0.1, 0.3, 0.5})
            run_labeled(out,
                        phase_shrink_check(make_scenario(ProfilePair::singular_rational(l), 0.05,
                                                         {1.0}, 0.0, 20.0, b)),
                        std::string(b == Branch::Plus ? "plus" : "minus") + "/lambda=" + label(l));
    run_labeled(out,
                phase_shrink_check(make_scenario(ProfilePair::morse_exp(1.0), 0.05, {1.0}, 0.0, 20.0)),
                "lambda=1");
    // Power-law phase presets stay out of this suite: for sigma < 0 the
    // momentum p = sqrt(m) qdot diverges whenever the trajectory crosses the
    // origin, so its peak sequence is not a shrinkage observable.
    for (double l : {1.0, 3.0, 5.0})
        run_labeled(out,
                    phase_shrink_check(make_scenario(ProfilePair::ndim_mathews_lakshmanan(l, 3), 0.05,
                                                     ndim_amps(0.9 / l), 0.0, 20.0)),
                    "lambda=" + label(l));
    return out;
}

std::vector<CheckReport> suite_roundtrip() {
    std::vector<CheckReport> out;
    run_labeled(out, roundtrip_check(ProfilePair::uniform(), -3.0, 3.0), "identity");
    run_labeled(out, roundtrip_check(ProfilePair::mathews_lakshmanan(2.0), -2.0, 2.0), "lambda=2");
    run_labeled(out, roundtrip_check(ProfilePair::singular_rational(1.0), -2.0, 0.9), "lambda=1");
    run_labeled(out, roundtrip_check(ProfilePair::morse_exp(1.0), -1.5, 1.5), "lambda=1");
    run_labeled(out, roundtrip_check(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 0.02, 2.0),
                "lambda=1");
    run_labeled(out, roundtrip_check(ProfilePair::power_law(1.0, -0.5, 2), 0.05, 2.0), "sigma=-0.5");
    run_labeled(out, roundtrip_check(ProfilePair::power_law(1.0, 2.0, 2), 0.05, 2.0), "sigma=2");
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "residual", "oracle", "energy", "isochrony", "phase", "roundtrip", "all"};
    return names;
}

std::vector<CheckReport> run_suite(const std::string& suite) {
    if (suite == "residual")
        return suite_residual();
    if (suite == "oracle")
        return suite_oracle();
    if (suite == "energy")
        return suite_energy();
    if (suite == "isochrony")
        return suite_isochrony();
    if (suite == "phase")
        return suite_phase();
    if (suite == "roundtrip")
        return suite_roundtrip();
    if (suite == "all") {
        std::vector<CheckReport> out;
        static const char* const parts[] = {"residual", "oracle",  "energy",
                                            "isochrony", "phase", "roundtrip"};
        for (const char* s : parts) {
            auto part = run_suite(s);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verification suite '" + suite +
                                "' (expected residual|oracle|energy|isochrony|phase|roundtrip|all)");
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.passed)
            return false;
    return true;
}

std::string format_reports(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const CheckReport& r : reports) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << "  metric=" << r.metric
           << " threshold=" << r.threshold;
        if (!r.passed)
            os << "  [" << r.details << "]";
        os << '\n';
    }
    return os.str();
}

void write_reports_json(const std::string& path, const std::string& suite,
                        const std::vector<CheckReport>& reports) {
    nlohmann::json j;
    j["suite"] = suite;
    j["all_passed"] = all_passed(reports);
    j["reports"] = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        j["reports"].push_back({{"name", r.name},
                                {"passed", r.passed},
                                {"metric", r.metric},
                                {"threshold", r.threshold},
                                {"details", r.details}});
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open report file " + path);
    out << j.dump(2) << '\n';
}

} // namespace pdmosc
