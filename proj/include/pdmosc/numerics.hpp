#ifndef PDMOSC_NUMERICS_HPP
#define PDMOSC_NUMERICS_HPP

#include <functional>
#include <vector>

namespace pdmosc {

using ScalarFn = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b] with interval
// bisection. Stops when the summed error estimate drops below
// max(abs_tol, rel_tol*|integral|). Throws QuadratureError once the interval
// budget is spent without reaching the tolerance.
double integrate_adaptive(const ScalarFn& f, double a, double b,
                          double rel_tol = 1e-12, double abs_tol = 0.0,
                          int max_intervals = 4000);

// Safeguarded Newton/bisection root of f on a bracket [lo, hi] with
// f(lo)*f(hi) <= 0. fprime may be empty (pure bisection). Throws
// ConvergenceError after max_iter iterations without |interval| <= xtol.
double find_root(const ScalarFn& f, const ScalarFn& fprime,
                 double lo, double hi, double xtol = 1e-12,
                 int max_iter = 200);

// All sign changes of f on [t0, t1], scanned on a uniform grid and refined
// by bisection to time_tol. Tangential touches (no sign change) are skipped.
std::vector<double> locate_sign_changes(const ScalarFn& f, double t0, double t1,
                                        std::size_t grid = 2000,
                                        double time_tol = 1e-12);

} // namespace pdmosc

#endif
