#ifndef PDMOSC_INTEGRATE_HPP
#define PDMOSC_INTEGRATE_HPP

#include "pdmosc/dynamics.hpp"

#include <functional>
#include <vector>

namespace pdmosc {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;      // 0 = no cap beyond the span
    double initial_step = 0.0;  // 0 = choose automatically
    long long max_steps = 10000000;
    double event_tol = 1e-12;   // time tolerance for event localization
    // Integration stops with a DomainBoundary event once the state comes
    // this close to a finite edge of the profile's validity domain.
    double boundary_guard = 1e-9;
};

enum class EventKind { DomainBoundary };

struct TrajectoryEvent {
    double t;
    EventKind kind;
    int component;  // -1: radial/global condition
};

// Acceleration xddot = rhs(t, x, xdot).
using AccelFn = std::function<Vec(double, const Vec&, const Vec&)>;
// Termination guard; positive in the interior, integration stops where it
// crosses zero.
using GuardFn = std::function<double(double, const Vec&, const Vec&)>;

// Dense trajectory from one adaptive integration: states at accepted steps
// plus the continuous extension of every step, so the solution can be
// evaluated anywhere inside the span. Immutable after construction.
class Trajectory {
public:
    double t_begin() const { return samples_.front().t; }
    double t_end() const { return t_end_; }
    std::size_t dimension() const { return dim_; }

    std::size_t sample_count() const { return samples_.size(); }
    const PhaseState& sample(std::size_t i) const { return samples_[i]; }

    // Dense evaluation; t must lie inside [t_begin, t_end]. At sample times
    // this reproduces the stored samples exactly.
    PhaseState at(double t) const;
    double position(double t, std::size_t component) const;
    double velocity(double t, std::size_t component) const;

    const std::vector<TrajectoryEvent>& events() const { return events_; }
    bool terminated_early() const { return terminated_early_; }
    // event_tol of the integration that produced this trajectory
    double event_tol() const { return event_tol_; }

private:
    struct DenseStep {
        double t;
        double h;
        // Continuous extension y(t+theta h) = r1 + theta(r2 + (1-theta)(r3 +
        // theta(r4 + (1-theta) r5))); exact at both step endpoints.
        std::vector<double> r1, r2, r3, r4, r5;
    };

    std::vector<double> eval_raw(double t) const;

    std::size_t dim_ = 0;
    double t_end_ = 0.0;
    double event_tol_ = 1e-12;
    std::vector<PhaseState> samples_;
    std::vector<DenseStep> steps_;
    std::vector<TrajectoryEvent> events_;
    bool terminated_early_ = false;

    friend Trajectory integrate(const AccelFn&, const PhaseState&, double,
                                const IntegratorConfig&, const GuardFn&);
};

// Adaptive Dormand-Prince 5(4) integration of xddot = rhs from s0 to t1
// (t1 > s0.t) with PI step-size control and dense output. DomainError thrown
// by the rhs during a trial step rejects the step; persistent failure
// surfaces as StepUnderflow. Throws StepBudgetExceeded past cfg.max_steps.
Trajectory integrate(const AccelFn& rhs, const PhaseState& s0, double t1,
                     const IntegratorConfig& cfg = {},
                     const GuardFn& guard = nullptr);

// Convenience overload: integrates the PDM equations of motion and installs
// a domain-boundary guard when the profile has a finite singular edge.
Trajectory integrate(const ProfilePair& profile, const DhoParams& params,
                     const PhaseState& s0, double t1,
                     const IntegratorConfig& cfg = {});

// Times where x_component changes sign, localized on the dense output to the
// trajectory's event_tol (overridable); ascending, possibly empty.
std::vector<double> find_zero_crossings(const Trajectory& trajectory,
                                        std::size_t component,
                                        double time_tol = 0.0);

} // namespace pdmosc

#endif
