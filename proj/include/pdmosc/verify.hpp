#ifndef PDMOSC_VERIFY_HPP
#define PDMOSC_VERIFY_HPP

#include "pdmosc/integrate.hpp"
#include "pdmosc/transform.hpp"

#include <string>
#include <vector>

namespace pdmosc {

// Outcome of one machine check. passed <=> metric <= threshold. Composite
// checks (several tolerances at once) report the normalized worst ratio
// raw/tolerance with threshold 1; single-criterion checks report the raw
// number. details names the worst offender.
struct CheckReport {
    std::string name;
    bool passed = false;
    double metric = 0.0;
    double threshold = 0.0;
    std::string details;
};

// Plugs the closed-form trajectory into the equations of motion: values and
// analytic first derivatives from pdm_solution, second derivative by 5-point
// central differences (h = 1e-4 / omega0, independent of the hand-coded
// derivatives it audits). metric = max |xddot_fd - rhs| over grid and
// components.
CheckReport residual_check(const PdmScenario& scenario,
                           std::size_t grid_points = 1000,
                           double threshold = 1e-6);

// Integrates the equations of motion from the analytic initial state and
// reports the max pointwise position deviation from the closed form.
CheckReport oracle_compare(const PdmScenario& scenario,
                           const IntegratorConfig& cfg = {},
                           double threshold = 1e-6);

// eta = 0: relative energy conservation to 1e-8. eta > 0: composite of
// |dE/dt - rayleigh_power| <= 1e-5 (relative to the peak dissipated power;
// dE/dt by central differences, h = 1e-5/omega0) and strict decrease of E
// between grid samples; normalized metric, threshold 1.
CheckReport dissipation_check(const PdmScenario& scenario,
                              std::size_t grid_points = 1000);

// Zero-crossing times of x(t) across scenarios that share (omega0, eta);
// metric = max pairwise deviation of the k-th crossing, k < crossings.
// Throws InsufficientCrossings when a scenario has fewer than `crossings`
// sign changes in its span.
CheckReport isochronicity_check(const std::vector<PdmScenario>& scenarios,
                                std::size_t crossings = 5,
                                double threshold = 1e-9);

// Successive local maxima of |x_c(t)| and |p_c(t)| must strictly decrease on
// each side of the equilibrium (for origin-asymmetric maps the interleaved
// peak sequence alternates even though every orbit loop nests inside the
// previous one), and the final phase radius must fall below its initial
// value; metric = worst relative increase between successive peaks (negative
// when everything shrinks), threshold 0. Rejects scenarios that are not
// under-damped with eta > 0.
CheckReport phase_shrink_check(const PdmScenario& scenario,
                               std::size_t samples = 2001);

// Both directions of the m-Q correspondence on a uniform grid over
// [lo, hi]: quadrature reconstruction of Q against the closed form
// (tolerance 1e-8) and the algebraic reconstruction of m (1e-12);
// normalized metric, threshold 1.
CheckReport roundtrip_check(const ProfilePair& profile, double lo, double hi,
                            std::size_t grid_points = 100);

// Named suites over the built-in figure scenarios:
// residual | oracle | energy | isochrony | phase | roundtrip | all.
std::vector<CheckReport> run_suite(const std::string& suite);
const std::vector<std::string>& suite_names();

bool all_passed(const std::vector<CheckReport>& reports);
std::string format_reports(const std::vector<CheckReport>& reports);
void write_reports_json(const std::string& path, const std::string& suite,
                        const std::vector<CheckReport>& reports);

} // namespace pdmosc

#endif
