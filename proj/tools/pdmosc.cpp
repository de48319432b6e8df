#include "pdmosc/config.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/output.hpp"
#include "pdmosc/presets.hpp"
#include "pdmosc/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitRuntime = 3;

void list_presets() {
    for (const pdmosc::FigurePreset& f : pdmosc::figure_presets())
        std::cout << f.name << "  " << f.description << " [" << f.members.size()
                  << " member(s)]\n";
}

int cmd_run(const std::string& config_path, const std::string& out_override,
            double tol_override, bool svg_flag) {
    pdmosc::ScenarioConfig cfg = pdmosc::ScenarioConfig::parse_file(config_path);
    if (!out_override.empty())
        cfg.out_dir = out_override;
    if (tol_override > 0.0) {
        cfg.rel_tol = tol_override;
        cfg.abs_tol = tol_override * 1e-2;
    }
    if (svg_flag)
        cfg.svg = true;

    const pdmosc::PdmScenario scenario = cfg.scenario();
    const pdmosc::SampledRun run =
        cfg.integrated ? pdmosc::sample_integrated(scenario, cfg.samples, cfg.integrator())
                       : pdmosc::sample_analytic(scenario, cfg.samples);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const std::string traj = (fs::path(cfg.out_dir) / "trajectory.csv").string();
    const std::string phase = (fs::path(cfg.out_dir) / "phase.csv").string();
    pdmosc::write_trajectory_csv(traj, run);
    pdmosc::write_phase_csv(phase, run);
    std::cout << traj << "\n" << phase << "\n";
    if (cfg.svg) {
        const std::string plot = (fs::path(cfg.out_dir) / "plot.svg").string();
        pdmosc::write_plot_svg(plot, run);
        std::cout << plot << "\n";
    }
    return kExitOk;
}

int cmd_figure(const std::string& name, const std::string& out_dir, int samples,
               bool svg) {
    const pdmosc::FigurePreset* preset = pdmosc::find_preset(name);
    if (!preset) {
        std::cerr << "unknown preset '" << name << "'; see list-presets\n";
        return kExitValidation;
    }
    for (const std::string& f : pdmosc::run_figure_preset(*preset, out_dir, samples, svg))
        std::cout << f << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& out_dir) {
    const auto reports = pdmosc::run_suite(suite);
    std::cout << pdmosc::format_reports(reports);
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string json_path =
        (fs::path(out_dir) / ("verify_" + suite + ".json")).string();
    pdmosc::write_reports_json(json_path, suite, reports);
    const bool ok = pdmosc::all_passed(reports);
    std::cout << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
              << reports.size() << " checks, report " << json_path << ")\n";
    return ok ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"position-dependent-mass damped harmonic oscillators: "
                 "closed forms, integration, verification"};
    app.require_subcommand(0, 1);
    bool list_flag = false;
    app.add_flag("--list-presets", list_flag, "enumerate figure presets and exit");

    auto* run = app.add_subcommand("run", "run one scenario config and export CSV");
    std::string config_path, run_out;
    double tol_override = 0.0;
    bool run_svg = false;
    run->add_option("-c,--config", config_path, "scenario config file")->required();
    run->add_option("--out", run_out, "output directory override");
    run->add_option("--tol", tol_override, "integrator rel_tol override (abs_tol = tol/100)");
    run->add_flag("--svg", run_svg, "also write plot.svg");

    auto* figure = app.add_subcommand("figure", "emit the CSV files of a figure preset");
    std::string fig_name, fig_out = "out";
    int fig_samples = 2001;
    bool fig_svg = false;
    figure->add_option("name", fig_name, "preset name (see list-presets)")->required();
    figure->add_option("--out", fig_out, "output directory");
    figure->add_option("--samples", fig_samples, "rows per member")->check(CLI::Range(2, 10000000));
    figure->add_flag("--svg", fig_svg, "also write plot.svg per member");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, verify_out = "out";
    verify->add_option("suite", suite, "residual|oracle|energy|isochrony|phase|roundtrip|all")
        ->required();
    verify->add_option("--out", verify_out, "report directory");

    auto* lp = app.add_subcommand("list-presets", "enumerate figure presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (list_flag || lp->parsed()) {
            list_presets();
            return kExitOk;
        }
        if (run->parsed())
            return cmd_run(config_path, run_out, tol_override, run_svg);
        if (figure->parsed())
            return cmd_figure(fig_name, fig_out, fig_samples, fig_svg);
        if (verify->parsed())
            return cmd_verify(suite, verify_out);
        std::cout << app.help();
        return kExitOk;
    } catch (const pdmosc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
