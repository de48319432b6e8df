#include "pdmosc/transform.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pdmosc {

namespace {

double norm(const Vec& v) {
    double s = 0.0;
    for (double c : v)
        s += c * c;
    return std::sqrt(s);
}

void check_dimension(const ProfilePair& profile, const Vec& v, const char* what) {
    if (static_cast<int>(v.size()) != profile.dimension()) {
        std::ostringstream os;
        os << what << ": dimension " << v.size() << " does not match profile dimension "
           << profile.dimension();
        throw std::invalid_argument(os.str());
    }
}

// Monotone solve of G(r) = target for profiles without a closed inverse.
// G' = sqrt(m) > 0, so a sign change brackets the unique root; the bracket
// grows geometrically from a seed inside the domain and is clamped to
// approach finite domain edges by bisection rather than stepping onto them.
double solve_forward_radius(const ProfilePair& profile, double target) {
    const auto& dom = profile.domain();
    auto f = [&](double r) { return profile.forward_radius(r) - target; };
    auto df = [&](double r) { return profile.sqrt_mass(r); };

    double seed;
    if (dom.contains(0.0))
        seed = 0.0;
    else if (std::isfinite(dom.lo) && std::isfinite(dom.hi))
        seed = 0.5 * (dom.lo + dom.hi);
    else if (std::isfinite(dom.lo))
        seed = dom.lo + (std::abs(dom.lo) + 1.0) * 1e-8;
    else
        seed = dom.hi - (std::abs(dom.hi) + 1.0) * 1e-8;

    const double fs = f(seed);
    if (fs == 0.0)
        return seed;
    double edge = seed;
    double step = std::max(1.0, std::abs(target));
    if (fs < 0.0) {
        for (int i = 0; i < 200; ++i) {
            double cand = edge + step;
            if (std::isfinite(dom.hi))
                cand = std::min(cand, 0.5 * (edge + dom.hi));
            if (f(cand) >= 0.0)
                return find_root(f, df, edge, cand, 1e-13, 200);
            edge = cand;
            step *= 2.0;
        }
    } else {
        for (int i = 0; i < 200; ++i) {
            double cand = edge - step;
            if (std::isfinite(dom.lo))
                cand = std::max(cand, 0.5 * (edge + dom.lo));
            if (f(cand) <= 0.0)
                return find_root(f, df, cand, edge, 1e-13, 200);
            edge = cand;
            step *= 2.0;
        }
    }
    throw ConvergenceError("inverse_map: could not bracket the target radius");
}

} // namespace

void PdmScenario::validate() const {
    if (static_cast<int>(amps.dimension()) != profile.dimension())
        throw std::invalid_argument("scenario: amplitude dimension does not match profile");
    if (!(t1 > t0))
        throw std::invalid_argument("scenario: t_span must be non-empty");
    if (profile.family() == Family::NdimMathewsLakshmanan &&
        !(profile.lambda() * amps.norm() < 1.0))
        throw std::invalid_argument(
            "scenario: n-dim Mathews-Lakshmanan requires lambda*|A| < 1");
}

Vec forward_map(const ProfilePair& profile, const Vec& x) {
    check_dimension(profile, x, "forward_map");
    if (!profile.radial())
        return {profile.forward_radius(x[0])};
    const double r = norm(x);
    profile.require_in_domain(r);
    const double s = profile.sqrt_deformation(r);
    Vec q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        q[i] = s * x[i];
    return q;
}

Vec inverse_map(const ProfilePair& profile, const Vec& q, Branch branch) {
    check_dimension(profile, q, "inverse_map");
    const double l = profile.lambda();
    switch (profile.family()) {
    case Family::Uniform:
        return q;
    case Family::MathewsLakshmanan:
        return {std::sinh(l * q[0]) / l};
    case Family::SingularRational: {
        const double v = q[0];
        const double root = std::sqrt(l * l * v * v + 4.0);
        const double sign = branch == Branch::Plus ? 1.0 : -1.0;
        return {0.5 * v * (-l * v + sign * root)};
    }
    case Family::MorseExp: {
        if (!(l * q[0] + 1.0 > 0.0)) {
            std::ostringstream os;
            os << "morse_exp inverse: lambda*q + 1 = " << l * q[0] + 1.0
               << " must be positive";
            throw DomainError(os.str());
        }
        return {std::log1p(l * q[0]) / l};
    }
    case Family::NdimMathewsLakshmanan: {
        const double qn = norm(q);
        const double d = 1.0 - l * l * qn * qn;
        if (!(d > 0.0))
            throw DomainError("ndim_mathews_lakshmanan inverse: lambda*|q| must be < 1");
        const double scale = 1.0 / std::sqrt(d);
        Vec x(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            x[i] = scale * q[i];
        return x;
    }
    case Family::PowerLaw: {
        const double qn = norm(q);
        if (qn == 0.0)
            return Vec(q.size(), 0.0);
        const double r = std::pow(qn / profile.alpha(), 1.0 / (profile.sigma() + 1.0));
        const double scale = r / qn;
        Vec x(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            x[i] = scale * q[i];
        return x;
    }
    case Family::Custom: {
        if (!profile.radial()) {
            const double r = solve_forward_radius(profile, q[0]);
            return {r};
        }
        const double qn = norm(q);
        if (qn == 0.0)
            return Vec(q.size(), 0.0);
        const double r = solve_forward_radius(profile, qn);
        const double scale = r / qn;
        Vec x(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            x[i] = scale * q[i];
        return x;
    }
    }
    throw std::logic_error("unreachable");
}

PdmState pdm_solution(const PdmScenario& scenario, double t) {
    const ReferenceState ref =
        reference_solution(scenario.params, scenario.amps, t, scenario.form);
    PdmState out;
    out.x = inverse_map(scenario.profile, ref.q, scenario.branch);
    const double r = scenario.profile.radial() ? norm(out.x) : out.x[0];
    const double sm = scenario.profile.sqrt_mass(r);
    // The Minus branch trajectory is the image of -q, so its velocity picks
    // up the mirrored sign: sqrt(m) xdot = d/dt(-q).
    const double sign = (scenario.branch == Branch::Minus &&
                         scenario.profile.family() == Family::SingularRational)
                            ? -1.0
                            : 1.0;
    out.xdot.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i)
        out.xdot[i] = sign * ref.qdot[i] / sm;
    return out;
}

} // namespace pdmosc
