// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails. Tolerances are pinned in code next to each check.
#include "pdmosc/integrate.hpp"
#include "pdmosc/output.hpp"
#include "pdmosc/presets.hpp"
#include "pdmosc/transform.hpp"
#include "pdmosc/verify.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pdmosc;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& o) {
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << number << ": "
              << title << " (" << o.detail << ")\n";
    if (!o.passed)
        ++failures;
}

PdmScenario scen(ProfilePair profile, double eta, Vec amps, double t1 = 20.0,
                 Branch branch = Branch::Plus) {
    PdmScenario s(std::move(profile), DhoParams(1.0, eta), AmplitudeVector(std::move(amps)));
    s.t1 = t1;
    s.branch = branch;
    return s;
}

Vec ndim_amps(double norm_target) {
    const double a = norm_target / std::sqrt(3.0);
    return {a, a, a};
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// --- criterion 1: exactness of the closed forms against their equations ---
Outcome exactness() {
    std::vector<PdmScenario> scenarios;
    for (double eta : {0.0, 0.2, 1.0, 1.5}) {
        scenarios.push_back(scen(ProfilePair::mathews_lakshmanan(2.0), eta, {1.0}));
        scenarios.push_back(scen(ProfilePair::singular_rational(1.0), eta, {1.0}));
        scenarios.push_back(
            scen(ProfilePair::singular_rational(1.0), eta, {1.0}, 20.0, Branch::Minus));
        scenarios.push_back(
            scen(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), eta, ndim_amps(0.45)));
    }
    for (double eta : {0.2, 1.0, 1.5})
        scenarios.push_back(scen(ProfilePair::morse_exp(1.0), eta, {1.0}));
    for (double sigma : {-0.5, 2.0})
        for (double eta : {1.0, 1.5})
            scenarios.push_back(scen(ProfilePair::power_law(1.0, sigma, 1), eta, {1.0}));

    constexpr double threshold = 1e-6;
    double worst = 0.0;
    std::string worst_name;
    for (const PdmScenario& s : scenarios) {
        const CheckReport rep = residual_check(s, 1000, threshold);
        if (rep.metric > worst) {
            worst = rep.metric;
            worst_name = s.profile.name();
        }
        if (!rep.passed)
            return {false, rep.name + " residual " + fmt(rep.metric)};
    }
    return {true, fmt(scenarios.size()) + " scenarios, max residual " + fmt(worst) +
                      " (" + worst_name + ") <= 1e-6"};
}

// --- criterion 2: integration reproduces the mapped analytic solutions ---
Outcome linearization_oracle() {
    std::vector<PdmScenario> scenarios;
    scenarios.push_back(scen(ProfilePair::uniform(), 0.05, {0.9}));
    scenarios.push_back(scen(ProfilePair::mathews_lakshmanan(2.0), 0.0, {1.0}));
    scenarios.push_back(scen(ProfilePair::mathews_lakshmanan(2.0), 0.05, {1.0}));
    scenarios.push_back(scen(ProfilePair::singular_rational(0.3), 0.05, {1.0}, 10.0));
    scenarios.push_back(
        scen(ProfilePair::singular_rational(1.0), 1.0, {1.0}, 10.0, Branch::Minus));
    scenarios.push_back(scen(ProfilePair::morse_exp(1.0), 0.2, {1.0}, 10.0));
    scenarios.push_back(scen(ProfilePair::morse_exp(1.0), 1.5, {1.0}, 10.0));
    scenarios.push_back(
        scen(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 0.2, ndim_amps(0.45)));
    scenarios.push_back(
        scen(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 1.0, ndim_amps(0.45)));
    scenarios.push_back(scen(ProfilePair::power_law(1.0, -0.5, 1), 1.0, {1.0}, 8.0));
    scenarios.push_back(scen(ProfilePair::power_law(1.0, 2.0, 1), 1.5, {1.0}, 10.0));

    IntegratorConfig cfg;  // rel_tol 1e-10 default
    constexpr double threshold = 1e-6;
    double worst = 0.0;
    for (const PdmScenario& s : scenarios) {
        const CheckReport rep = oracle_compare(s, cfg, threshold);
        worst = std::max(worst, rep.metric);
        if (!rep.passed)
            return {false, rep.name + " deviation " + fmt(rep.metric)};
    }
    return {true, fmt(scenarios.size()) + " scenarios across all families and regimes, max deviation " +
                      fmt(worst) + " <= 1e-6"};
}

// --- criterion 3: the two directions of the m-Q correspondence ---
Outcome roundtrip() {
    struct Window {
        ProfilePair profile;
        double lo, hi;
    };
    std::vector<Window> windows;
    windows.push_back({ProfilePair::mathews_lakshmanan(2.0), -2.0, 2.0});
    windows.push_back({ProfilePair::singular_rational(1.0), -2.0, 0.9});
    windows.push_back({ProfilePair::morse_exp(1.0), -1.5, 1.5});
    windows.push_back({ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 0.02, 2.0});
    windows.push_back({ProfilePair::power_law(1.0, -0.5, 2), 0.05, 2.0});
    windows.push_back({ProfilePair::power_law(1.0, 2.0, 2), 0.05, 2.0});

    double worst_q = 0.0, worst_m = 0.0;
    for (const Window& w : windows) {
        auto mass_fn = [&w](double s) { return w.profile.mass(s); };
        auto q_fn = [&w](double s) { return w.profile.deformation(s); };
        auto qp_fn = [&w](double s) { return w.profile.deformation_deriv(s); };
        for (int i = 0; i < 100; ++i) {
            const double r = w.lo + (w.hi - w.lo) * i / 99.0;
            const double q = w.profile.deformation(r);
            const double m = w.profile.mass(r);
            worst_q = std::max(worst_q,
                               std::abs(deformation_from_mass(mass_fn, r, 1e-12) - q) /
                                   std::abs(q));
            worst_m = std::max(worst_m,
                               std::abs(mass_from_deformation(q_fn, qp_fn, r) - m) /
                                   std::abs(m));
        }
    }
    const bool ok = worst_q <= 1e-8 && worst_m <= 1e-12;
    return {ok, "max rel error: Q from m " + fmt(worst_q) + " <= 1e-8, m from Q " +
                    fmt(worst_m) + " <= 1e-12"};
}

// --- criterion 4: conservation at eta = 0, dissipation law for eta > 0 ---
Outcome energy_law() {
    // integrated conservation over [0, 20]
    for (PdmScenario s : {scen(ProfilePair::uniform(), 0.0, {0.9}),
                          scen(ProfilePair::mathews_lakshmanan(2.0), 0.0, {1.0})}) {
        const PdmState init = pdm_solution(s, 0.0);
        const Trajectory traj = integrate(s.profile, s.params,
                                          PhaseState{0.0, init.x, init.xdot}, 20.0);
        const double e0 =
            energy(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}).total;
        for (int i = 0; i <= 2000; ++i) {
            const double t = 20.0 * i / 2000.0;
            const PhaseState st = traj.at(t);
            const double e = energy(s.profile, s.params, st).total;
            if (std::abs(e - e0) > 1e-8 * std::abs(e0))
                return {false, s.profile.name() + " eta=0 energy drift " +
                                   fmt(std::abs(e - e0) / std::abs(e0))};
        }
    }
    // dissipation balance and monotone decay for eta > 0
    std::vector<PdmScenario> damped;
    for (double eta : {0.05, 1.0, 1.5}) {
        damped.push_back(scen(ProfilePair::mathews_lakshmanan(2.0), eta, {1.0}));
        damped.push_back(scen(ProfilePair::morse_exp(1.0), eta, {1.0}));
        damped.push_back(scen(ProfilePair::singular_rational(1.0), eta, {1.0}));
        damped.push_back(
            scen(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), eta, ndim_amps(0.45)));
    }
    damped.push_back(scen(ProfilePair::power_law(1.0, -0.5, 1), 1.0, {1.0}));
    damped.push_back(scen(ProfilePair::power_law(1.0, 2.0, 1), 1.5, {1.0}));
    for (const PdmScenario& s : damped) {
        const CheckReport rep = dissipation_check(s);
        if (!rep.passed)
            return {false, rep.name + ": " + rep.details};
    }
    return {true, "eta=0 conserved to 1e-8 (integrated); " + fmt(damped.size()) +
                      " damped scenarios satisfy dE/dt = rayleigh_power to 1e-5 and decay monotonically"};
}

// --- criterion 5: damping-regime phenomenology of the fig1a preset ---
Outcome regime_phenomenology() {
    auto sampled = [](double eta) {
        return sample_analytic(scen(ProfilePair::mathews_lakshmanan(2.0), eta, {1.0}), 2001);
    };
    auto sign_changes = [](const SampledRun& run) {
        int count = 0;
        for (std::size_t i = 1; i < run.times.size(); ++i)
            if (run.x[i - 1][0] * run.x[i][0] < 0.0)
                ++count;
        return count;
    };
    auto settle_time = [](const SampledRun& run) {
        const double thr = 0.01 * std::abs(run.x[0][0]);
        for (std::size_t i = 0; i < run.times.size(); ++i) {
            bool settled = true;
            for (std::size_t j = i; j < run.times.size(); ++j)
                if (std::abs(run.x[j][0]) >= thr) {
                    settled = false;
                    break;
                }
            if (settled)
                return run.times[i];
        }
        return run.times.back() + 1.0;
    };

    const SampledRun under = sampled(0.05);
    const SampledRun critical = sampled(1.0);
    const SampledRun over = sampled(1.5);
    const int osc = sign_changes(under);
    if (osc < 3)
        return {false, "eta=0.05 shows only " + fmt(osc) + " sign changes"};
    if (sign_changes(critical) != 0 || sign_changes(over) != 0)
        return {false, "a non-oscillatory regime changed sign"};
    const double tc = settle_time(critical);
    const double to = settle_time(over);
    if (!(tc < to))
        return {false, "critical settle " + fmt(tc) + " not faster than over-damped " + fmt(to)};
    return {true, "eta=0.05: " + fmt(osc) + " sign changes; settle times " + fmt(tc) +
                      " (eta=1) < " + fmt(to) + " (eta=1.5)"};
}

// --- criterion 6: isochronicity of the Mathews-Lakshmanan sweeps ---
Outcome isochronicity() {
    std::vector<PdmScenario> sweeps;
    for (double A : {0.5, 0.9})
        for (double l : {0.5, 2.0, 4.0})
            sweeps.push_back(scen(ProfilePair::mathews_lakshmanan(l), 0.05, {A}));
    const CheckReport rep = isochronicity_check(sweeps, 5, 1e-9);
    return {rep.passed, "first 5 crossings over 6 sweeps agree within " +
                            fmt(rep.metric) + " <= 1e-9"};
}

// --- criterion 7: phase-space shrinkage of the under-damped presets ---
Outcome phase_shrinkage() {
    std::vector<PdmScenario> presets;
    for (double l : {0.5, 1.0, 2.0, 3.0, 4.0})  // figs 1d, 1e, 1f
        presets.push_back(scen(ProfilePair::mathews_lakshmanan(l), 0.05, {0.9}));
    for (Branch b : {Branch::Plus, Branch::Minus})  // figs 2c, 2d
        for (double l : {0.1, 0.3, 0.5})
            presets.push_back(scen(ProfilePair::singular_rational(l), 0.05, {1.0}, 20.0, b));
    presets.push_back(scen(ProfilePair::morse_exp(1.0), 0.05, {1.0}));  // fig 3b
    for (double l : {1.0, 3.0, 5.0})  // fig 4b
        presets.push_back(
            scen(ProfilePair::ndim_mathews_lakshmanan(l, 3), 0.05, ndim_amps(0.9 / l)));

    double worst = -1.0;
    for (const PdmScenario& s : presets) {
        const CheckReport rep = phase_shrink_check(s);
        worst = std::max(worst, rep.metric);
        if (!rep.passed)
            return {false, rep.name + ": " + rep.details};
    }
    return {true, fmt(presets.size()) +
                      " under-damped presets; successive |x|,|p| peaks shrink (worst step " +
                      fmt(worst) + ")"};
}

// --- criterion 8: integrated n-dim trajectories stay collinear with A ---
Outcome collinearity() {
    const Vec amps = ndim_amps(0.45);
    const PdmScenario s = scen(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), 0.2, amps);
    const PdmState init = pdm_solution(s, 0.0);
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 20.0);
    const double an = s.amps.norm();
    const Vec ahat{amps[0] / an, amps[1] / an, amps[2] / an};
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double t = 20.0 * i / 2000.0;
        const Vec x = traj.at(t).x;
        const double proj = x[0] * ahat[0] + x[1] * ahat[1] + x[2] * ahat[2];
        double off2 = 0.0;
        for (int c = 0; c < 3; ++c)
            off2 += (x[c] - proj * ahat[c]) * (x[c] - proj * ahat[c]);
        worst = std::max(worst, std::sqrt(off2));
    }
    return {worst <= 1e-8, "max off-axis distance " + fmt(worst) + " <= 1e-8"};
}

// --- criterion 9: byte-identical figure output ---
Outcome determinism() {
    namespace fs = std::filesystem;
    const FigurePreset* preset = find_preset("fig1a");
    if (!preset)
        return {false, "preset fig1a missing"};
    const std::string d1 = "acceptance_det_1", d2 = "acceptance_det_2";
    const auto files1 = run_figure_preset(*preset, d1);
    const auto files2 = run_figure_preset(*preset, d2);
    if (files1.size() != files2.size() || files1.empty())
        return {false, "file lists differ"};
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    bool identical = true;
    for (std::size_t i = 0; i < files1.size(); ++i)
        identical = identical && slurp(files1[i]) == slurp(files2[i]);
    fs::remove_all(d1);
    fs::remove_all(d2);
    return {identical, fmt(files1.size()) + " files compared byte-for-byte"};
}

} // namespace

int main() {
    report(1, "exactness of closed-form solutions (residual <= 1e-6)", exactness());
    report(2, "linearization oracle (integration deviation <= 1e-6)", linearization_oracle());
    report(3, "m <-> Q round trip (1e-8 / 1e-12)", roundtrip());
    report(4, "energy law (conservation 1e-8; dissipation balance 1e-5)", energy_law());
    report(5, "damping-regime phenomenology of fig1a", regime_phenomenology());
    report(6, "isochronicity of zero-crossing times (1e-9)", isochronicity());
    report(7, "phase-space shrinkage of under-damped presets", phase_shrinkage());
    report(8, "n-dim collinearity of integrated trajectories (1e-8)", collinearity());
    report(9, "deterministic figure output (byte-identical CSV)", determinism());

    if (failures == 0)
        std::cout << "acceptance: all 9 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return failures == 0 ? 0 : 1;
}
