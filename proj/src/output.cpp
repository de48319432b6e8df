#include "pdmosc/output.hpp"
#include "pdmosc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pdmosc {

namespace {

std::vector<double> sample_times(double t0, double t1, int samples) {
    std::vector<double> out(samples);
    for (int i = 0; i < samples; ++i)
        out[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(samples - 1);
    return out;
}

void fill_row(SampledRun& run, double t, const Vec& x, const Vec& xdot) {
    const PdmScenario& s = run.scenario;
    run.times.push_back(t);
    run.x.push_back(x);
    run.xdot.push_back(xdot);
    run.p.push_back(momentum(s.profile, PhaseState{t, x, xdot}, s.params.m0()));
    run.q_ref.push_back(reference_solution(s.params, s.amps, t, s.form).q);
    run.energy_total.push_back(energy(s.profile, s.params, PhaseState{t, x, xdot}).total);
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file " + path);
    return out;
}

} // namespace

std::string format_float(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

SampledRun sample_analytic(const PdmScenario& scenario, int samples) {
    scenario.validate();
    SampledRun run{scenario, {}, {}, {}, {}, {}, {}};
    for (double t : sample_times(scenario.t0, scenario.t1, samples)) {
        const PdmState s = pdm_solution(scenario, t);
        fill_row(run, t, s.x, s.xdot);
    }
    return run;
}

SampledRun sample_integrated(const PdmScenario& scenario, int samples,
                             const IntegratorConfig& cfg) {
    scenario.validate();
    const PdmState init = pdm_solution(scenario, scenario.t0);
    const Trajectory traj = integrate(scenario.profile, scenario.params,
                                      PhaseState{scenario.t0, init.x, init.xdot},
                                      scenario.t1, cfg);
    SampledRun run{scenario, {}, {}, {}, {}, {}, {}};
    for (double t : sample_times(scenario.t0, scenario.t1, samples)) {
        if (t > traj.t_end())
            break;
        const PhaseState s = traj.at(t);
        fill_row(run, t, s.x, s.xdot);
    }
    return run;
}

void write_trajectory_csv(const std::string& path, const SampledRun& run) {
    std::ofstream out = open_or_throw(path);
    const std::size_t n = run.scenario.amps.dimension();
    out << "t";
    for (std::size_t c = 1; c <= n; ++c)
        out << ",x_" << c;
    for (std::size_t c = 1; c <= n; ++c)
        out << ",xdot_" << c;
    for (std::size_t c = 1; c <= n; ++c)
        out << ",p_" << c;
    out << ",E";
    for (std::size_t c = 1; c <= n; ++c)
        out << ",q_ref_" << c;
    out << "\n";
    for (std::size_t i = 0; i < run.times.size(); ++i) {
        out << format_float(run.times[i]);
        for (std::size_t c = 0; c < n; ++c)
            out << ',' << format_float(run.x[i][c]);
        for (std::size_t c = 0; c < n; ++c)
            out << ',' << format_float(run.xdot[i][c]);
        for (std::size_t c = 0; c < n; ++c)
            out << ',' << format_float(run.p[i][c]);
        out << ',' << format_float(run.energy_total[i]);
        for (std::size_t c = 0; c < n; ++c)
            out << ',' << format_float(run.q_ref[i][c]);
        out << "\n";
    }
}

void write_phase_csv(const std::string& path, const SampledRun& run) {
    std::ofstream out = open_or_throw(path);
    const std::size_t n = run.scenario.amps.dimension();
    out << "t";
    for (std::size_t c = 1; c <= n; ++c)
        out << ",x_" << c << ",p_" << c;
    out << "\n";
    for (std::size_t i = 0; i < run.times.size(); ++i) {
        out << format_float(run.times[i]);
        for (std::size_t c = 0; c < n; ++c)
            out << ',' << format_float(run.x[i][c]) << ',' << format_float(run.p[i][c]);
        out << "\n";
    }
}

namespace {

struct Box {
    double xlo, xhi, ylo, yhi;
};

Box bounding(const std::vector<double>& xs, const std::vector<double>& ys) {
    Box b{xs[0], xs[0], ys[0], ys[0]};
    for (double v : xs) {
        b.xlo = std::min(b.xlo, v);
        b.xhi = std::max(b.xhi, v);
    }
    for (double v : ys) {
        b.ylo = std::min(b.ylo, v);
        b.yhi = std::max(b.yhi, v);
    }
    if (b.xhi == b.xlo)
        b.xhi = b.xlo + 1.0;
    if (b.yhi == b.ylo)
        b.yhi = b.ylo + 1.0;
    return b;
}

void polyline(std::ofstream& out, const std::vector<double>& xs,
              const std::vector<double>& ys, const Box& b, double ox, double oy,
              double w, double h, const char* color) {
    char buf[64];
    out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"none\" stroke=\"#888\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double px = ox + (xs[i] - b.xlo) / (b.xhi - b.xlo) * w;
        const double py = oy + h - (ys[i] - b.ylo) / (b.yhi - b.ylo) * h;
        std::snprintf(buf, sizeof buf, "%.6g,%.6g ", px, py);
        out << buf;
    }
    out << "\"/>\n";
}

} // namespace

void write_plot_svg(const std::string& path, const SampledRun& run) {
    std::ofstream out = open_or_throw(path);
    std::vector<double> x0(run.times.size()), p0(run.times.size());
    for (std::size_t i = 0; i < run.times.size(); ++i) {
        x0[i] = run.x[i][0];
        p0[i] = run.p[i][0];
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"860\" height=\"420\" "
           "viewBox=\"0 0 860 420\">\n";
    out << "<text x=\"210\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">x(t)</text>\n";
    out << "<text x=\"650\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">p vs x</text>\n";
    polyline(out, run.times, x0, bounding(run.times, x0), 20, 40, 380, 340, "#1f77b4");
    polyline(out, x0, p0, bounding(x0, p0), 460, 40, 380, 340, "#d62728");
    out << "</svg>\n";
}

} // namespace pdmosc
