#ifndef PDMOSC_ERRORS_HPP
#define PDMOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdmosc {

// Argument lies outside a profile's validity domain, or a map was asked to
// leave its image (e.g. lambda*x >= 1 for the singular rational family).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative solver (root finder, inverse map) exhausted its iteration cap.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance in budget.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The integrator hit its accepted+rejected step budget.
struct StepBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The controller drove the step below 1e-14 of the span; signals stiffness
// or an unguarded singularity.
struct StepUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check that needs oscillations got fewer than it requires.
struct InsufficientCrossings : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario config file rejected; message carries file:line anchors.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pdmosc

#endif
