#include "pdmosc/presets.hpp"
#include "pdmosc/output.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

namespace pdmosc {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
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

void eta_sweep(FigurePreset& fig, const ProfilePair& profile, Vec amps,
               Branch branch = Branch::Plus) {
    for (double eta : {0.0, 0.2, 1.0, 1.5})
        fig.members.push_back({"eta_" + num(eta), scen(profile, eta, amps, 20.0, branch)});
}

std::vector<FigurePreset> build_presets() {
    std::vector<FigurePreset> figs;

    {
        FigurePreset f{"fig1a", "Mathews-Lakshmanan x(t), damping sweep (lambda=2, A=1, omega=1)", {}};
        eta_sweep(f, ProfilePair::mathews_lakshmanan(2.0), {1.0});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig1b", "Mathews-Lakshmanan x(t), amplitude sweep (lambda=0.5, eta=0.05)", {}};
        for (double A : {0.5, 0.9})
            f.members.push_back({"A_" + num(A), scen(ProfilePair::mathews_lakshmanan(0.5), 0.05, {A})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig1c", "Mathews-Lakshmanan x(t), lambda sweep (A=0.9, eta=0.05)", {}};
        for (double l : {0.5, 2.0, 4.0})
            f.members.push_back({"lambda_" + num(l), scen(ProfilePair::mathews_lakshmanan(l), 0.05, {0.9})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig1d", "Mathews-Lakshmanan phase portraits, lambda=1,2,3 (A=0.9, eta=0.05)", {}};
        for (double l : {1.0, 2.0, 3.0})
            f.members.push_back({"lambda_" + num(l), scen(ProfilePair::mathews_lakshmanan(l), 0.05, {0.9})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig1e", "Mathews-Lakshmanan phase portrait, lambda=0.5 (A=0.9, eta=0.05)", {}};
        f.members.push_back({"lambda_0.5", scen(ProfilePair::mathews_lakshmanan(0.5), 0.05, {0.9})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig1f", "Mathews-Lakshmanan phase portrait, lambda=4 (A=0.9, eta=0.05)", {}};
        f.members.push_back({"lambda_4", scen(ProfilePair::mathews_lakshmanan(4.0), 0.05, {0.9})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig2a", "singular rational x_plus(t), damping sweep (lambda=1, A=1)", {}};
        eta_sweep(f, ProfilePair::singular_rational(1.0), {1.0}, Branch::Plus);
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig2b", "singular rational x_minus(t), damping sweep (lambda=1, A=1)", {}};
        eta_sweep(f, ProfilePair::singular_rational(1.0), {1.0}, Branch::Minus);
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig2c", "singular rational plus-branch phase portraits, lambda=0.1,0.3,0.5 (eta=0.05)", {}};
        for (double l : {0.1, 0.3, 0.5})
            f.members.push_back({"lambda_" + num(l),
                                 scen(ProfilePair::singular_rational(l), 0.05, {1.0}, 20.0, Branch::Plus)});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig2d", "singular rational minus-branch phase portraits, lambda=0.1,0.3,0.5 (eta=0.05)", {}};
        for (double l : {0.1, 0.3, 0.5})
            f.members.push_back({"lambda_" + num(l),
                                 scen(ProfilePair::singular_rational(l), 0.05, {1.0}, 20.0, Branch::Minus)});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig3a", "Morse x(t), damping sweep (lambda=1, A=1)", {}};
        eta_sweep(f, ProfilePair::morse_exp(1.0), {1.0});
        figs.push_back(std::move(f));
    }
    {
        // The lambda=3 and lambda=5 members leave the Morse map's domain
        // (lambda q + 1 <= 0) at t ~ 1.95 / 1.79; their spans stop short of
        // the breakdown instead of clamping.
        FigurePreset f{"fig3b", "Morse phase portraits, lambda=1,3,5 (A=1, eta=0.05)", {}};
        f.members.push_back({"lambda_1", scen(ProfilePair::morse_exp(1.0), 0.05, {1.0}, 20.0)});
        f.members.push_back({"lambda_3", scen(ProfilePair::morse_exp(3.0), 0.05, {1.0}, 1.9)});
        f.members.push_back({"lambda_5", scen(ProfilePair::morse_exp(5.0), 0.05, {1.0}, 1.75)});
        figs.push_back(std::move(f));
    }
    {
        // Caption says A=1 at lambda=1, which violates the lambda*|A| < 1
        // existence constraint; amplitudes are rescaled to lambda*|A| = 0.9.
        FigurePreset f{"fig4a", "n-dim Mathews-Lakshmanan x_i(t), damping sweep (n=3, lambda=1, |A|=0.9)", {}};
        eta_sweep(f, ProfilePair::ndim_mathews_lakshmanan(1.0, 3), ndim_amps(0.9));
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig4b", "n-dim Mathews-Lakshmanan phase portraits, lambda=1,3,5 (n=3, eta=0.05, |A|=0.9/lambda)", {}};
        for (double l : {1.0, 3.0, 5.0})
            f.members.push_back({"lambda_" + num(l),
                                 scen(ProfilePair::ndim_mathews_lakshmanan(l, 3), 0.05, ndim_amps(0.9 / l))});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig5a", "power-law x(t), damping sweep (sigma=-0.5, alpha=1, A=1)", {}};
        eta_sweep(f, ProfilePair::power_law(1.0, -0.5, 1), {1.0});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig5b", "power-law x(t), damping sweep (sigma=2, alpha=1, A=1)", {}};
        eta_sweep(f, ProfilePair::power_law(1.0, 2.0, 1), {1.0});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig5c", "power-law phase portrait (sigma=0.5, alpha=1, eta=0.05)", {}};
        f.members.push_back({"alpha_1", scen(ProfilePair::power_law(1.0, 0.5, 1), 0.05, {1.0})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig5d", "power-law phase portrait (sigma=0.5, alpha=3, eta=0.05)", {}};
        f.members.push_back({"alpha_3", scen(ProfilePair::power_law(3.0, 0.5, 1), 0.05, {1.0})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig5e", "power-law phase portrait (sigma=-0.5, alpha=1, eta=0.05)", {}};
        f.members.push_back({"alpha_1", scen(ProfilePair::power_law(1.0, -0.5, 1), 0.05, {1.0})});
        figs.push_back(std::move(f));
    }
    {
        FigurePreset f{"fig5f", "power-law phase portrait (sigma=-0.5, alpha=3, eta=0.05)", {}};
        f.members.push_back({"alpha_3", scen(ProfilePair::power_law(3.0, -0.5, 1), 0.05, {1.0})});
        figs.push_back(std::move(f));
    }
    return figs;
}

} // namespace

const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = build_presets();
    return presets;
}

const FigurePreset* find_preset(const std::string& name) {
    for (const FigurePreset& f : figure_presets())
        if (f.name == name)
            return &f;
    return nullptr;
}

std::vector<std::string> run_figure_preset(const FigurePreset& preset,
                                           const std::string& out_dir, int samples,
                                           bool svg) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(out_dir) / preset.name;
    fs::create_directories(dir);
    std::vector<std::string> written;
    for (const PresetMember& m : preset.members) {
        const SampledRun run = sample_analytic(m.scenario, samples);
        const std::string traj = (dir / (m.label + "_trajectory.csv")).string();
        const std::string phase = (dir / (m.label + "_phase.csv")).string();
        write_trajectory_csv(traj, run);
        write_phase_csv(phase, run);
        written.push_back(traj);
        written.push_back(phase);
        if (svg) {
            const std::string plot = (dir / (m.label + "_plot.svg")).string();
            write_plot_svg(plot, run);
            written.push_back(plot);
        }
    }
    return written;
}

} // namespace pdmosc
