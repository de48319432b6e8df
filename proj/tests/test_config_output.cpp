#include "pdmosc/config.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/output.hpp"
#include "pdmosc/presets.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace pdmosc;

namespace {

ScenarioConfig parse_text(const std::string& text) {
    std::istringstream in(text);
    return ScenarioConfig::parse(in, "test.cfg");
}

std::string parse_error_of(const std::string& text) {
    try {
        parse_text(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_SUITE("config and output") {

TEST_CASE("a minimal config fills in the defaults") {
    const ScenarioConfig cfg = parse_text("family = mathews_lakshmanan\nlambda = 2\n");
    CHECK(cfg.omega0 == 1.0);
    CHECK(cfg.eta == 0.0);
    CHECK(cfg.t1 == 20.0);
    CHECK(cfg.samples == 2001);
    CHECK(cfg.amplitudes == Vec{1.0});
    const PdmScenario s = cfg.scenario();
    CHECK(s.profile.family() == Family::MathewsLakshmanan);
    CHECK(s.form == SolutionForm::Paper);
}

TEST_CASE("full config round trip") {
    const ScenarioConfig cfg = parse_text(
        "# three-dimensional scenario\n"
        "family = ndim_mathews_lakshmanan\n"
        "lambda = 1.0\n"
        "dimension = 3\n"
        "omega0 = 1.0\n"
        "eta = 0.2\n"
        "amplitudes = 0.25, 0.25, 0.25\n"
        "form = ic_consistent\n"
        "t0 = 0\nt1 = 10\nsamples = 101\n"
        "source = integrated\n"
        "rel_tol = 1e-9\n");
    CHECK(cfg.integrated);
    const PdmScenario s = cfg.scenario();
    CHECK(s.profile.dimension() == 3);
    CHECK(s.form == SolutionForm::IcConsistent);
    CHECK(cfg.integrator().rel_tol == 1e-9);
}

TEST_CASE("damping coefficient converts to eta") {
    const ScenarioConfig cfg = parse_text(
        "family = uniform\nomega0 = 0.25\nm0 = 2\nb = 1\n");
    CHECK(cfg.eta == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parse errors carry file and line anchors") {
    CHECK(parse_error_of("family = uniform\nwhat = 1\n").find("test.cfg:2") !=
          std::string::npos);
    CHECK(parse_error_of("family = uniform\nwhat = 1\n").find("unknown key") !=
          std::string::npos);
    CHECK(parse_error_of("lambda = 2\n").find("missing required key 'family'") !=
          std::string::npos);
    CHECK(parse_error_of("family = uniform\neta = abc\n").find("test.cfg:2") !=
          std::string::npos);
    CHECK(parse_error_of("family = uniform\neta = 0.1\neta = 0.2\n")
              .find("already set on line 2") != std::string::npos);
    CHECK(parse_error_of("family = uniform\neta = 0.1\nb = 1\n")
              .find("mutually exclusive") != std::string::npos);
    CHECK(parse_error_of("family = uniform\nbroken line\n").find("test.cfg:2") !=
          std::string::npos);
    CHECK(parse_error_of("family = morse_exp\nlambda = 1\ndimension = 2\n")
              .find("one-dimensional") != std::string::npos);
    CHECK(parse_error_of("family = nosuch\n").find("unknown family") !=
          std::string::npos);
}

TEST_CASE("trajectory csv schema and float format") {
    PdmScenario s(ProfilePair::mathews_lakshmanan(2.0), DhoParams(1.0, 0.05),
                  AmplitudeVector(Vec{1.0}));
    s.t1 = 2.0;
    const SampledRun run = sample_analytic(s, 5);
    const std::string path = "cfgtest_trajectory.csv";
    write_trajectory_csv(path, run);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x_1,xdot_1,p_1,E,q_ref_1");
    const std::regex field("-?\\d\\.\\d{16}e[+-]\\d{2,3}");
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream fields(line);
        std::string f;
        int nfield = 0;
        while (std::getline(fields, f, ',')) {
            ++nfield;
            CHECK(std::regex_match(f, field));
        }
        CHECK(nfield == 6);
    }
    CHECK(rows == 5);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("phase csv schema covers every component") {
    const double ai = 0.45 / std::sqrt(3.0);
    PdmScenario s(ProfilePair::ndim_mathews_lakshmanan(1.0, 3), DhoParams(1.0, 0.05),
                  AmplitudeVector(Vec{ai, ai, ai}));
    s.t1 = 1.0;
    const std::string path = "cfgtest_phase.csv";
    write_phase_csv(path, sample_analytic(s, 3));
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x_1,p_1,x_2,p_2,x_3,p_3");
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("float rendering is 17 significant digits") {
    CHECK(format_float(1.0) == "1.0000000000000000e+00");
    CHECK(format_float(-0.5) == "-5.0000000000000000e-01");
    CHECK(format_float(0.1) == "1.0000000000000001e-01");
}

TEST_CASE("csv emission is byte-identical across runs") {
    PdmScenario s(ProfilePair::morse_exp(1.0), DhoParams(1.0, 0.2),
                  AmplitudeVector(Vec{1.0}));
    s.t1 = 5.0;
    const SampledRun r1 = sample_analytic(s, 201);
    const SampledRun r2 = sample_analytic(s, 201);
    write_trajectory_csv("cfgtest_a.csv", r1);
    write_trajectory_csv("cfgtest_b.csv", r2);
    CHECK(slurp("cfgtest_a.csv") == slurp("cfgtest_b.csv"));
    std::remove("cfgtest_a.csv");
    std::remove("cfgtest_b.csv");
}

TEST_CASE("integrated and analytic sampling agree") {
    PdmScenario s(ProfilePair::mathews_lakshmanan(2.0), DhoParams(1.0, 0.05),
                  AmplitudeVector(Vec{1.0}));
    s.t1 = 10.0;
    const SampledRun ana = sample_analytic(s, 101);
    const SampledRun num = sample_integrated(s, 101);
    REQUIRE(ana.times.size() == num.times.size());
    for (std::size_t i = 0; i < ana.times.size(); ++i)
        CHECK(std::abs(ana.x[i][0] - num.x[i][0]) <= 1e-6);
}

TEST_CASE("svg writer emits a two-panel document") {
    PdmScenario s(ProfilePair::uniform(), DhoParams(1.0, 0.05),
                  AmplitudeVector(Vec{1.0}));
    s.t1 = 5.0;
    const std::string path = "cfgtest_plot.svg";
    write_plot_svg(path, sample_analytic(s, 101));
    const std::string body = slurp(path);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("polyline") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("figure presets cover the parameter grid of every figure") {
    CHECK(figure_presets().size() == 20);
    CHECK(find_preset("fig1a") != nullptr);
    CHECK(find_preset("fig9z") == nullptr);
    const FigurePreset* f1a = find_preset("fig1a");
    REQUIRE(f1a->members.size() == 4);
    CHECK(f1a->members[0].scenario.params.eta() == 0.0);
    CHECK(f1a->members[3].scenario.params.eta() == 1.5);
    // every preset member must be a valid scenario
    for (const FigurePreset& f : figure_presets())
        for (const PresetMember& m : f.members)
            CHECK_NOTHROW(m.scenario.validate());
}

TEST_CASE("figure preset emission writes one file pair per member") {
    namespace fs = std::filesystem;
    const std::string out = "cfgtest_out";
    const auto files = run_figure_preset(*find_preset("fig1b"), out, 17);
    CHECK(files.size() == 4);  // 2 members x (trajectory + phase)
    for (const std::string& f : files)
        CHECK(fs::exists(f));
    fs::remove_all(out);
}

} // TEST_SUITE
