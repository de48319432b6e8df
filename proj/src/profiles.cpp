#include "pdmosc/profiles.hpp"
#include "pdmosc/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pdmosc {

namespace {

// asinh(u)/u, continuous through u = 0.
double asinh_ratio(double u) {
    if (u == 0.0)
        return 1.0;
    return std::asinh(u) / u;
}

// d/du [asinh(u)/u]; the direct form cancels near 0, so switch to a series.
double asinh_ratio_deriv(double u) {
    if (std::abs(u) < 1e-3) {
        const double u2 = u * u;
        return u * (-1.0 / 3.0 + u2 * (3.0 / 10.0 - u2 * 15.0 / 56.0));
    }
    return (u / std::sqrt(1.0 + u * u) - std::asinh(u)) / (u * u);
}

// expm1(u)/u, continuous through u = 0.
double expm1_ratio(double u) {
    if (u == 0.0)
        return 1.0;
    return std::expm1(u) / u;
}

// d/du [expm1(u)/u].
double expm1_ratio_deriv(double u) {
    if (std::abs(u) < 1e-3)
        return 0.5 + u * (1.0 / 3.0 + u * (1.0 / 8.0 + u / 30.0));
    return (u * std::exp(u) - std::expm1(u)) / (u * u);
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::Uniform: return "uniform";
    case Family::MathewsLakshmanan: return "mathews_lakshmanan";
    case Family::SingularRational: return "singular_rational";
    case Family::MorseExp: return "morse_exp";
    case Family::NdimMathewsLakshmanan: return "ndim_mathews_lakshmanan";
    case Family::PowerLaw: return "power_law";
    case Family::Custom: return "custom";
    }
    return "unknown";
}

double Interval::boundary_distance(double r) const {
    double d = std::numeric_limits<double>::infinity();
    if (std::isfinite(lo))
        d = std::min(d, r - lo);
    if (std::isfinite(hi))
        d = std::min(d, hi - r);
    return d;
}

ProfilePair ProfilePair::uniform(int dimension) {
    if (dimension < 1)
        throw std::invalid_argument("dimension must be >= 1");
    ProfilePair p;
    p.family_ = Family::Uniform;
    p.dimension_ = dimension;
    p.radial_ = dimension > 1;
    return p;
}

ProfilePair ProfilePair::mathews_lakshmanan(double lambda) {
    require_positive(lambda, "lambda");
    ProfilePair p;
    p.family_ = Family::MathewsLakshmanan;
    p.lambda_ = lambda;
    return p;
}

ProfilePair ProfilePair::singular_rational(double lambda) {
    require_positive(lambda, "lambda");
    ProfilePair p;
    p.family_ = Family::SingularRational;
    p.lambda_ = lambda;
    p.domain_.hi = 1.0 / lambda;
    return p;
}

ProfilePair ProfilePair::morse_exp(double lambda) {
    require_positive(lambda, "lambda");
    ProfilePair p;
    p.family_ = Family::MorseExp;
    p.lambda_ = lambda;
    return p;
}

ProfilePair ProfilePair::ndim_mathews_lakshmanan(double lambda, int dimension) {
    require_positive(lambda, "lambda");
    if (dimension < 1)
        throw std::invalid_argument("dimension must be >= 1");
    ProfilePair p;
    p.family_ = Family::NdimMathewsLakshmanan;
    p.lambda_ = lambda;
    p.dimension_ = dimension;
    p.radial_ = true;
    return p;
}

ProfilePair ProfilePair::power_law(double alpha, double sigma, int dimension) {
    require_positive(alpha, "alpha");
    if (!(sigma > -1.0))
        throw std::invalid_argument("sigma must be > -1 (sqrt(m) = a(s+1)r^s must stay positive)");
    if (dimension < 1)
        throw std::invalid_argument("dimension must be >= 1");
    ProfilePair p;
    p.family_ = Family::PowerLaw;
    p.alpha_ = alpha;
    p.sigma_ = sigma;
    p.dimension_ = dimension;
    p.radial_ = true;
    p.domain_.lo = 0.0;
    return p;
}

ProfilePair ProfilePair::custom(CustomProfile spec) {
    if (!spec.mass || !spec.mass_deriv)
        throw std::invalid_argument("custom profile needs mass and mass_deriv callables");
    if (spec.dimension < 1)
        throw std::invalid_argument("dimension must be >= 1");
    ProfilePair p;
    p.family_ = Family::Custom;
    p.dimension_ = spec.dimension;
    p.radial_ = spec.radial;
    p.domain_ = spec.domain;
    p.custom_ = std::move(spec);
    return p;
}

void ProfilePair::require_in_domain(double r) const {
    if (!in_domain(r)) {
        std::ostringstream os;
        os << name() << ": argument " << r << " outside validity domain ("
           << domain_.lo << ", " << domain_.hi << ")";
        throw DomainError(os.str());
    }
}

double ProfilePair::mass(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::Uniform:
        return 1.0;
    case Family::MathewsLakshmanan:
        return 1.0 / (1.0 + u * u);
    case Family::SingularRational: {
        const double d = 1.0 - u;
        const double w = 2.0 - u;
        return 0.25 * w * w / (d * d * d);
    }
    case Family::MorseExp:
        return std::exp(2.0 * u);
    case Family::NdimMathewsLakshmanan: {
        const double w = 1.0 + u * u;
        return 1.0 / (w * w * w);
    }
    case Family::PowerLaw: {
        const double s1 = alpha_ * (sigma_ + 1.0);
        return s1 * s1 * std::pow(r, 2.0 * sigma_);
    }
    case Family::Custom:
        return custom_.mass(r);
    }
    throw std::logic_error("unreachable");
}

double ProfilePair::mass_deriv(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::Uniform:
        return 0.0;
    case Family::MathewsLakshmanan: {
        const double w = 1.0 + u * u;
        return -2.0 * lambda_ * u / (w * w);
    }
    case Family::SingularRational: {
        const double d = 1.0 - u;
        const double w = 2.0 - u;
        // m'/m = lambda (3/d - 2/w)
        return mass(r) * lambda_ * (4.0 - u) / (d * w);
    }
    case Family::MorseExp:
        return 2.0 * lambda_ * std::exp(2.0 * u);
    case Family::NdimMathewsLakshmanan: {
        const double w = 1.0 + u * u;
        return -6.0 * lambda_ * lambda_ * r / (w * w * w * w);
    }
    case Family::PowerLaw: {
        const double s1 = alpha_ * (sigma_ + 1.0);
        return 2.0 * sigma_ * s1 * s1 * std::pow(r, 2.0 * sigma_ - 1.0);
    }
    case Family::Custom:
        return custom_.mass_deriv(r);
    }
    throw std::logic_error("unreachable");
}

double ProfilePair::sqrt_deformation(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::Uniform:
        return 1.0;
    case Family::MathewsLakshmanan:
        return asinh_ratio(u);
    case Family::SingularRational:
        return 1.0 / std::sqrt(1.0 - u);
    case Family::MorseExp:
        return expm1_ratio(u);
    case Family::NdimMathewsLakshmanan:
        return 1.0 / std::sqrt(1.0 + u * u);
    case Family::PowerLaw:
        return alpha_ * std::pow(r, sigma_);
    case Family::Custom:
        if (custom_.deformation)
            return std::sqrt(custom_.deformation(r));
        return std::sqrt(deformation(r));
    }
    throw std::logic_error("unreachable");
}

double ProfilePair::deformation(double r) const {
    if (family_ == Family::Custom && !custom_.deformation) {
        require_in_domain(r);
        return deformation_from_mass(custom_.mass, r, custom_.quad_tol);
    }
    if (family_ == Family::Custom) {
        require_in_domain(r);
        return custom_.deformation(r);
    }
    const double s = sqrt_deformation(r);
    return s * s;
}

double ProfilePair::deformation_deriv(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::Uniform:
        return 0.0;
    case Family::MathewsLakshmanan:
        return 2.0 * lambda_ * asinh_ratio(u) * asinh_ratio_deriv(u);
    case Family::SingularRational: {
        const double d = 1.0 - u;
        return lambda_ / (d * d);
    }
    case Family::MorseExp:
        return 2.0 * lambda_ * expm1_ratio(u) * expm1_ratio_deriv(u);
    case Family::NdimMathewsLakshmanan: {
        const double w = 1.0 + u * u;
        return -2.0 * lambda_ * lambda_ * r / (w * w);
    }
    case Family::PowerLaw:
        return 2.0 * sigma_ * alpha_ * alpha_ * std::pow(r, 2.0 * sigma_ - 1.0);
    case Family::Custom: {
        if (custom_.deformation_deriv)
            return custom_.deformation_deriv(r);
        // Invert the m-Q relation: Q' = 2 sqrt(Q)(sqrt(m) - sqrt(Q))/r.
        if (std::abs(r) < 1e-8)
            return 0.5 * custom_.mass_deriv(0.0);
        const double sq = std::sqrt(deformation(r));
        return 2.0 * sq * (std::sqrt(custom_.mass(r)) - sq) / r;
    }
    }
    throw std::logic_error("unreachable");
}

double ProfilePair::sqrt_mass(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::MorseExp:
        return std::exp(u);
    case Family::SingularRational: {
        const double d = 1.0 - u;
        return 0.5 * (2.0 - u) / (d * std::sqrt(d));
    }
    case Family::PowerLaw:
        return alpha_ * (sigma_ + 1.0) * std::pow(r, sigma_);
    default:
        return std::sqrt(mass(r));
    }
}

double ProfilePair::restoring_factor(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::Uniform:
        return 1.0;
    case Family::MathewsLakshmanan:
        return asinh_ratio(u) * std::sqrt(1.0 + u * u);
    case Family::SingularRational:
        return 2.0 * (1.0 - u) / (2.0 - u);
    case Family::MorseExp:
        // (1 - e^{-u})/u, continuous through 0
        return u == 0.0 ? 1.0 : -std::expm1(-u) / u;
    case Family::NdimMathewsLakshmanan:
        return 1.0 + u * u;
    case Family::PowerLaw:
        return 1.0 / (sigma_ + 1.0);
    case Family::Custom:
        return sqrt_deformation(r) / std::sqrt(custom_.mass(r));
    }
    throw std::logic_error("unreachable");
}

double ProfilePair::radial_mass_slope(double r) const {
    require_in_domain(r);
    const double u = lambda_ * r;
    switch (family_) {
    case Family::Uniform:
        return 0.0;
    case Family::MathewsLakshmanan:
        // even profile: m'/(2 r m) is regular through r = 0
        return -lambda_ * lambda_ / (1.0 + u * u);
    case Family::NdimMathewsLakshmanan:
        return -3.0 * lambda_ * lambda_ / (1.0 + u * u);
    case Family::PowerLaw:
        return sigma_ / (r * r);
    case Family::Custom: {
        if (std::abs(r) < 1e-6) {
            // series fallback m''(0)/(2 m(0)): m'' by central difference of
            // the supplied derivative, accurate to ~1e-10 for smooth m
            const double h = 1e-5;
            const double m2 = (custom_.mass_deriv(h) - custom_.mass_deriv(-h)) / (2.0 * h);
            return 0.5 * m2 / custom_.mass(0.0);
        }
        return custom_.mass_deriv(r) / (2.0 * r * custom_.mass(r));
    }
    default:
        // 1D families keep the signed form m'/(2 x m); callers use it only
        // through the radial equations, where these families do not appear.
        return mass_deriv(r) / (2.0 * r * mass(r));
    }
}

double ProfilePair::forward_radius(double r) const {
    require_in_domain(r);
    switch (family_) {
    case Family::Uniform:
        return r;
    case Family::MathewsLakshmanan:
        return std::asinh(lambda_ * r) / lambda_;
    case Family::SingularRational:
        return r / std::sqrt(1.0 - lambda_ * r);
    case Family::MorseExp:
        return std::expm1(lambda_ * r) / lambda_;
    case Family::NdimMathewsLakshmanan:
        return r / std::sqrt(1.0 + lambda_ * lambda_ * r * r);
    case Family::PowerLaw:
        return alpha_ * std::pow(r, sigma_ + 1.0);
    case Family::Custom:
        return sqrt_deformation(r) * r;
    }
    throw std::logic_error("unreachable");
}

double deformation_from_mass(const ScalarFn& mass, double x, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("tol must be positive");
    auto sqrt_mass = [&mass](double s) {
        const double m = mass(s);
        if (!(m > 0.0))
            throw DomainError("deformation_from_mass: mass non-positive on integration path");
        return std::sqrt(m);
    };
    if (std::abs(x) < 1e-8)
        return mass(0.0);
    const double integral = integrate_adaptive(sqrt_mass, 0.0, x, 0.5 * tol);
    const double mean = integral / x;
    return mean * mean;
}

double mass_from_deformation(const ScalarFn& deformation,
                             const ScalarFn& deformation_deriv, double r) {
    const double q = deformation(r);
    if (!(q > 0.0))
        throw DomainError("mass_from_deformation: Q(r) must be positive");
    const double paren = 1.0 + 0.5 * deformation_deriv(r) * r / q;
    if (!(paren > 0.0))
        throw DomainError("mass_from_deformation: 1 + Q'r/(2Q) must be positive");
    return q * paren * paren;
}

} // namespace pdmosc
