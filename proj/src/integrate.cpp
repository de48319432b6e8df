#include "pdmosc/integrate.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pdmosc {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights for the 4th-order continuous extension.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

using State = std::vector<double>;

struct System {
    const AccelFn& accel;
    std::size_t n;

    // y = [x, xdot]
    State deriv(double t, const State& y) const {
        Vec x(y.begin(), y.begin() + n);
        Vec v(y.begin() + n, y.end());
        Vec a = accel(t, x, v);
        State dy(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            dy[i] = v[i];
            dy[n + i] = a[i];
        }
        return dy;
    }
};

bool all_finite(const State& y) {
    for (double v : y)
        if (!std::isfinite(v))
            return false;
    return true;
}

PhaseState unpack(double t, const State& y, std::size_t n) {
    PhaseState s;
    s.t = t;
    s.x.assign(y.begin(), y.begin() + n);
    s.xdot.assign(y.begin() + n, y.end());
    return s;
}

double initial_step_guess(const System& sys, double t0, const State& y0,
                          const State& f0, double rel_tol, double abs_tol,
                          double hmax) {
    const std::size_t m = y0.size();
    double dnf = 0.0, dny = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double sk = abs_tol + rel_tol * std::abs(y0[i]);
        if (sk == 0.0)
            continue;
        dnf += (f0[i] / sk) * (f0[i] / sk);
        dny += (y0[i] / sk) * (y0[i] / sk);
    }
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
    h = std::min(h, hmax);
    try {
        State y1(m);
        for (std::size_t i = 0; i < m; ++i)
            y1[i] = y0[i] + h * f0[i];
        const State f1 = sys.deriv(t0 + h, y1);
        double der2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double sk = abs_tol + rel_tol * std::abs(y0[i]);
            if (sk == 0.0)
                continue;
            der2 += ((f1[i] - f0[i]) / sk) * ((f1[i] - f0[i]) / sk);
        }
        der2 = std::sqrt(der2) / h;
        const double der12 = std::max(der2, std::sqrt(dnf));
        const double h1 =
            der12 <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
        h = std::min({100.0 * h, h1, hmax});
    } catch (const DomainError&) {
        // probe stepped outside the domain; keep the conservative h
    }
    return std::max(h, 1e-14);
}

} // namespace

std::vector<double> Trajectory::eval_raw(double t) const {
    if (samples_.empty() || steps_.empty())
        throw std::logic_error("empty trajectory");
    const double lo = t_begin();
    const double hi = t_end();
    if (!(t >= lo && t <= hi)) {
        std::ostringstream os;
        os << "trajectory evaluation at t = " << t << " outside [" << lo << ", "
           << hi << "]";
        throw std::out_of_range(os.str());
    }
    // last step whose start is <= t
    std::size_t idx = steps_.size() - 1;
    {
        std::size_t a = 0, b = steps_.size() - 1;
        while (a < b) {
            const std::size_t m = (a + b + 1) / 2;
            if (steps_[m].t <= t)
                a = m;
            else
                b = m - 1;
        }
        idx = a;
    }
    const DenseStep& st = steps_[idx];
    const double theta = (t - st.t) / st.h;
    const double theta1 = 1.0 - theta;
    std::vector<double> y(2 * dim_);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = st.r1[i] +
               theta * (st.r2[i] +
                        theta1 * (st.r3[i] + theta * (st.r4[i] + theta1 * st.r5[i])));
    return y;
}

PhaseState Trajectory::at(double t) const {
    // Exactly reproduce stored samples at sample times.
    auto it = std::lower_bound(
        samples_.begin(), samples_.end(), t,
        [](const PhaseState& s, double tt) { return s.t < tt; });
    if (it != samples_.end() && it->t == t)
        return *it;
    return unpack(t, eval_raw(t), dim_);
}

double Trajectory::position(double t, std::size_t component) const {
    return at(t).x.at(component);
}

double Trajectory::velocity(double t, std::size_t component) const {
    return at(t).xdot.at(component);
}

Trajectory integrate(const AccelFn& rhs, const PhaseState& s0, double t1,
                     const IntegratorConfig& cfg, const GuardFn& guard) {
    if (s0.x.size() != s0.xdot.size())
        throw std::invalid_argument("integrate: x and xdot dimensions differ");
    if (!(t1 > s0.t))
        throw std::invalid_argument("integrate: t1 must exceed the initial time");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be positive");
    if (cfg.max_steps <= 0)
        throw std::invalid_argument("integrate: max_steps must be positive");

    const std::size_t n = s0.x.size();
    const std::size_t m = 2 * n;
    System sys{rhs, n};

    const double span = t1 - s0.t;
    const double hmax = cfg.max_step > 0.0 ? std::min(cfg.max_step, span) : span;
    const double hmin = 1e-14 * span;

    double t = s0.t;
    State y(m);
    std::copy(s0.x.begin(), s0.x.end(), y.begin());
    std::copy(s0.xdot.begin(), s0.xdot.end(), y.begin() + n);

    State k1 = sys.deriv(t, y);  // initial-state domain errors propagate

    Trajectory traj;
    traj.dim_ = n;
    traj.event_tol_ = cfg.event_tol;
    traj.samples_.push_back(unpack(t, y, n));

    auto guard_value = [&](double tt, const State& yy) {
        Vec x(yy.begin(), yy.begin() + n);
        Vec v(yy.begin() + n, yy.end());
        return guard(tt, x, v);
    };
    if (guard && !(guard_value(t, y) > 0.0))
        throw DomainError("integrate: initial state violates the boundary guard");

    double h = cfg.initial_step > 0.0
                   ? std::min(cfg.initial_step, hmax)
                   : initial_step_guess(sys, t, y, k1, cfg.rel_tol, cfg.abs_tol, hmax);

    constexpr double safe = 0.9, beta = 0.04;
    constexpr double expo1 = 0.2 - beta * 0.75;
    constexpr double fac_lo = 0.2, fac_hi = 10.0;
    double facold = 1e-4;

    State k2(m), k3(m), k4(m), k5(m), k6(m), k7(m), ytmp(m), ynew(m);
    long long attempts = 0;

    while (t < t1) {
        if (++attempts > cfg.max_steps)
            throw StepBudgetExceeded("integrate: step budget of " +
                                     std::to_string(cfg.max_steps) + " exhausted");
        if (h < hmin)
            throw StepUnderflow("integrate: step size underflow at t = " +
                                std::to_string(t));
        // Stretch the last step instead of leaving a sliver behind it.
        bool final_step = false;
        if (t + 1.01 * h >= t1) {
            h = t1 - t;
            final_step = true;
        }

        bool domain_reject = false;
        try {
            for (std::size_t i = 0; i < m; ++i)
                ytmp[i] = y[i] + h * a21 * k1[i];
            k2 = sys.deriv(t + c2 * h, ytmp);
            for (std::size_t i = 0; i < m; ++i)
                ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            k3 = sys.deriv(t + c3 * h, ytmp);
            for (std::size_t i = 0; i < m; ++i)
                ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            k4 = sys.deriv(t + c4 * h, ytmp);
            for (std::size_t i = 0; i < m; ++i)
                ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                      a54 * k4[i]);
            k5 = sys.deriv(t + c5 * h, ytmp);
            for (std::size_t i = 0; i < m; ++i)
                ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                      a64 * k4[i] + a65 * k5[i]);
            k6 = sys.deriv(t + h, ytmp);
            for (std::size_t i = 0; i < m; ++i)
                ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                                      a75 * k5[i] + a76 * k6[i]);
            k7 = sys.deriv(t + h, ynew);
        } catch (const DomainError&) {
            domain_reject = true;
        }

        double err = 0.0;
        if (!domain_reject && all_finite(ynew) && all_finite(k7)) {
            for (std::size_t i = 0; i < m; ++i) {
                const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                       e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double sk =
                    cfg.abs_tol +
                    cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                err += (ei / sk) * (ei / sk);
            }
            err = std::sqrt(err / static_cast<double>(m));
        } else {
            err = std::numeric_limits<double>::infinity();
        }

        if (domain_reject || !std::isfinite(err)) {
            h *= 0.5;
            continue;
        }

        const double fac11 = std::pow(err, expo1);
        if (err <= 1.0) {
            // accept; Lund stabilization uses the previous accepted error
            double fac = fac11 / std::pow(facold, beta);
            fac = std::clamp(fac / safe, 1.0 / fac_hi, 1.0 / fac_lo);
            facold = std::max(err, 1e-4);
            Trajectory::DenseStep st;
            st.t = t;
            st.h = h;
            st.r1 = y;
            st.r2.resize(m);
            st.r3.resize(m);
            st.r4.resize(m);
            st.r5.resize(m);
            for (std::size_t i = 0; i < m; ++i) {
                const double ydiff = ynew[i] - y[i];
                const double bspl = h * k1[i] - ydiff;
                st.r2[i] = ydiff;
                st.r3[i] = bspl;
                st.r4[i] = ydiff - h * k7[i] - bspl;
                st.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                d6 * k6[i] + d7 * k7[i]);
            }
            traj.steps_.push_back(std::move(st));

            double t_next = t + h;
            bool stop = false;
            if (guard) {
                // scan for a guard crossing inside the accepted step
                const Trajectory::DenseStep& ds = traj.steps_.back();
                auto g_of = [&](double tt) {
                    const double theta = (tt - ds.t) / ds.h;
                    const double theta1 = 1.0 - theta;
                    State yy(m);
                    for (std::size_t i = 0; i < m; ++i)
                        yy[i] = ds.r1[i] +
                                theta * (ds.r2[i] +
                                         theta1 * (ds.r3[i] +
                                                   theta * (ds.r4[i] + theta1 * ds.r5[i])));
                    return guard_value(tt, yy);
                };
                double ta = t, ga = g_of(t);
                double tev = -1.0;
                for (int j = 1; j <= 8; ++j) {
                    const double tb = t + h * (static_cast<double>(j) / 8.0);
                    const double gb = g_of(tb);
                    if (ga > 0.0 && gb <= 0.0) {
                        // bisect the crossing
                        double a = ta, b = tb;
                        while (b - a > cfg.event_tol) {
                            const double mid = 0.5 * (a + b);
                            if (g_of(mid) > 0.0)
                                a = mid;
                            else
                                b = mid;
                        }
                        tev = 0.5 * (a + b);
                        break;
                    }
                    ta = tb;
                    ga = gb;
                }
                if (tev >= 0.0) {
                    traj.events_.push_back({tev, EventKind::DomainBoundary, -1});
                    traj.terminated_early_ = true;
                    t_next = tev;
                    stop = true;
                }
            }

            t = t_next;
            traj.t_end_ = t;
            if (stop) {
                const Trajectory::DenseStep& ds = traj.steps_.back();
                const double theta = (t - ds.t) / ds.h;
                const double theta1 = 1.0 - theta;
                State yy(m);
                for (std::size_t i = 0; i < m; ++i)
                    yy[i] = ds.r1[i] +
                            theta * (ds.r2[i] +
                                     theta1 * (ds.r3[i] +
                                               theta * (ds.r4[i] + theta1 * ds.r5[i])));
                traj.samples_.push_back(unpack(t, yy, n));
                break;
            }
            traj.samples_.push_back(unpack(t, ynew, n));
            y = ynew;
            k1 = k7;  // first-same-as-last
            if (final_step)
                break;
            h = std::min(h / fac, hmax);
        } else {
            // reject
            h = h / std::min(1.0 / fac_lo, fac11 / safe);
        }
    }

    traj.t_end_ = t;
    return traj;
}

Trajectory integrate(const ProfilePair& profile, const DhoParams& params,
                     const PhaseState& s0, double t1, const IntegratorConfig& cfg) {
    AccelFn rhs = [profile, params](double t, const Vec& x, const Vec& v) {
        return eom_rhs(profile, params, PhaseState{t, x, v});
    };
    GuardFn guard;
    if (std::isfinite(profile.domain().lo) || std::isfinite(profile.domain().hi)) {
        const double margin = cfg.boundary_guard;
        guard = [profile, margin](double, const Vec& x, const Vec&) {
            double arg;
            if (profile.radial()) {
                double s = 0.0;
                for (double c : x)
                    s += c * c;
                arg = std::sqrt(s);
            } else {
                arg = x[0];
            }
            return profile.boundary_distance(arg) - margin;
        };
    }
    return integrate(rhs, s0, t1, cfg, guard);
}

std::vector<double> find_zero_crossings(const Trajectory& trajectory,
                                        std::size_t component, double time_tol) {
    if (component >= trajectory.dimension())
        throw std::invalid_argument("find_zero_crossings: component out of range");
    if (time_tol <= 0.0)
        time_tol = trajectory.event_tol();
    auto f = [&](double t) { return trajectory.position(t, component); };
    std::vector<double> all;
    const std::size_t count = trajectory.sample_count();
    for (std::size_t k = 0; k + 1 < count; ++k) {
        const double a = trajectory.sample(k).t;
        const double b = trajectory.sample(k + 1).t;
        // probe inside each accepted step; steps are much shorter than an
        // oscillation period at any sane tolerance
        for (double tc : locate_sign_changes(f, a, b, 8, time_tol)) {
            if (all.empty() || tc - all.back() > 4.0 * time_tol)
                all.push_back(tc);
        }
    }
    return all;
}

} // namespace pdmosc
