#include "pdmosc/numerics.hpp"
#include "pdmosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace pdmosc {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point Gauss
// rule (QUADPACK values). Nodes are symmetric; only the non-negative half is
// stored. Even indices of xk are the Gauss subset.
constexpr double xk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double wk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
    double a, b;
    double integral;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const ScalarFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xk[i]);
        fv[14 - i] = f(c + h * xk[i]);
    }
    fv[7] = f(c);
    double kronrod = wk[7] * fv[7];
    double gauss = wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += wk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= h;
    gauss *= h;
    double err = std::abs(kronrod - gauss);
    // QUADPACK-style sharpening of the raw |K15-G7| estimate.
    if (err > 0.0) {
        double scale = std::pow(200.0 * err / (std::abs(kronrod) + 1e-300), 1.5);
        if (scale < 1.0)
            err = std::abs(kronrod) * scale + 1e-300;
    }
    return {a, b, kronrod, err};
}

} // namespace

double integrate_adaptive(const ScalarFn& f, double a, double b,
                          double rel_tol, double abs_tol, int max_intervals) {
    if (a == b)
        return 0.0;
    std::priority_queue<Panel> queue;
    queue.push(evaluate_panel(f, a, b));
    double total = queue.top().integral;
    double total_err = queue.top().error;
    int used = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (used >= max_intervals)
            throw QuadratureError(
                "adaptive quadrature: tolerance not reached within " +
                std::to_string(max_intervals) + " panels (error " +
                std::to_string(total_err) + ")");
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b))
            throw QuadratureError("adaptive quadrature: panel underflow near " +
                                  std::to_string(worst.a));
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++used;
    }
    return total;
}

double find_root(const ScalarFn& f, const ScalarFn& fprime,
                 double lo, double hi, double xtol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if (flo * fhi > 0.0)
        throw ConvergenceError("find_root: endpoints do not bracket a root");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        bool newton_ok = false;
        if (fprime) {
            const double fx = f(x);
            if (fx == 0.0)
                return x;
            if (fx * flo > 0.0)
                lo = x, flo = fx;
            else
                hi = x, fhi = fx;
            const double dfx = fprime(x);
            if (dfx != 0.0 && std::isfinite(dfx)) {
                const double step = fx / dfx;
                const double cand = x - step;
                if (cand > std::min(lo, hi) && cand < std::max(lo, hi)) {
                    x = cand;
                    newton_ok = true;
                }
            }
        } else {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0)
                return mid;
            if (fm * flo > 0.0)
                lo = mid, flo = fm;
            else
                hi = mid, fhi = fm;
        }
        if (!newton_ok)
            x = 0.5 * (lo + hi);
        if (std::abs(hi - lo) <= xtol)
            return x;
    }
    throw ConvergenceError("find_root: no convergence in " +
                           std::to_string(max_iter) + " iterations");
}

std::vector<double> locate_sign_changes(const ScalarFn& f, double t0, double t1,
                                        std::size_t grid, double time_tol) {
    std::vector<double> found;
    if (grid < 2 || t1 <= t0)
        return found;
    // Sample first; exact zeros at samples are handled by looking at the
    // nearest nonzero neighbours, so tangential touches are not counted.
    std::vector<double> ts(grid + 1), fs(grid + 1);
    const double dt = (t1 - t0) / static_cast<double>(grid);
    for (std::size_t i = 0; i <= grid; ++i) {
        ts[i] = (i == grid) ? t1 : t0 + dt * static_cast<double>(i);
        fs[i] = f(ts[i]);
    }
    std::size_t i = 0;
    while (i < grid) {
        if (fs[i] == 0.0) {
            std::size_t prev = i;
            while (prev > 0 && fs[prev] == 0.0)
                --prev;
            std::size_t next = i;
            while (next <= grid && fs[next] == 0.0)
                ++next;
            if (prev < i && next <= grid && fs[prev] * fs[next] < 0.0)
                found.push_back(ts[i]);
            i = next;
            continue;
        }
        if (fs[i + 1] != 0.0 && fs[i] * fs[i + 1] < 0.0) {
            double a = ts[i], b = ts[i + 1], va = fs[i];
            while (b - a > time_tol) {
                const double m = 0.5 * (a + b);
                const double vm = f(m);
                if (vm == 0.0) {
                    a = b = m;
                    break;
                }
                if (va * vm < 0.0)
                    b = m;
                else
                    a = m, va = vm;
            }
            found.push_back(0.5 * (a + b));
        }
        ++i;
    }
    return found;
}

} // namespace pdmosc
