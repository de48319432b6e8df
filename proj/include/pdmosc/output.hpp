#ifndef PDMOSC_OUTPUT_HPP
#define PDMOSC_OUTPUT_HPP

#include "pdmosc/integrate.hpp"
#include "pdmosc/transform.hpp"

#include <string>
#include <vector>

namespace pdmosc {

// A scenario evaluated on a uniform sample grid, ready for CSV/SVG emission.
struct SampledRun {
    PdmScenario scenario;
    std::vector<double> times;
    std::vector<Vec> x;
    std::vector<Vec> xdot;
    std::vector<Vec> p;
    std::vector<Vec> q_ref;
    std::vector<double> energy_total;
};

// Closed-form evaluation at `samples` uniform times.
SampledRun sample_analytic(const PdmScenario& scenario, int samples);

// Adaptive integration from the analytic initial state, sampled through the
// dense output. If a boundary guard fires, the grid is truncated at the
// termination time.
SampledRun sample_integrated(const PdmScenario& scenario, int samples,
                             const IntegratorConfig& cfg = {});

// trajectory.csv: t,x_1..x_n,xdot_1..xdot_n,p_1..p_n,E,q_ref_1..q_ref_n with
// floats in scientific notation at 17 significant digits (byte-stable across
// runs of the same build).
void write_trajectory_csv(const std::string& path, const SampledRun& run);

// phase.csv: t,x_1,p_1,...,x_n,p_n.
void write_phase_csv(const std::string& path, const SampledRun& run);

// Two-panel polyline rendering of x_1(t) and (x_1, p_1); presentation-grade.
void write_plot_svg(const std::string& path, const SampledRun& run);

// 17-significant-digit scientific rendering used by the CSV writers.
std::string format_float(double v);

} // namespace pdmosc

#endif
