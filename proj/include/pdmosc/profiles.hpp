#ifndef PDMOSC_PROFILES_HPP
#define PDMOSC_PROFILES_HPP

#include "pdmosc/numerics.hpp"

#include <functional>
#include <limits>
#include <string>

namespace pdmosc {

// Mass profiles m(r) paired with their coordinate deformations Q(r).
// The two are tied by sqrt(m) = sqrt(Q)*(1 + Q'r/(2Q)), equivalently
// sqrt(Q(r))*r = integral_0^r sqrt(m(s)) ds, so either one determines the
// other. All profile formulas set the bare mass scale to 1; the constant m0
// lives in DhoParams.

enum class Family {
    Uniform,
    MathewsLakshmanan,      // m(x) = 1/(1 + l^2 x^2), 1D
    SingularRational,       // Q(x) = 1/(1 - l x), 1D, domain l x < 1
    MorseExp,               // m(x) = e^{2 l x}, 1D
    NdimMathewsLakshmanan,  // m(r) = (1 + l^2 r^2)^-3, radial
    PowerLaw,               // sqrt(Q) = a r^s, m = a^2 (s+1)^2 r^{2s}, radial
    Custom,
};

std::string family_name(Family f);

// Open interval of valid radii (or of x in 1D). Finite endpoints are
// singular points of the profile.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double r) const { return r > lo && r < hi; }
    // Distance to the nearest finite endpoint; +inf when unbounded.
    double boundary_distance(double r) const;
};

// Callable-backed profile for masses outside the built-in set. When the
// deformation callables are absent, Q is reconstructed by quadrature of
// sqrt(m) and Q' through the m-Q relation.
struct CustomProfile {
    std::function<double(double)> mass;
    std::function<double(double)> mass_deriv;
    std::function<double(double)> deformation;        // optional
    std::function<double(double)> deformation_deriv;  // optional
    Interval domain;
    int dimension = 1;
    bool radial = false;
    double quad_tol = 1e-12;
};

class ProfilePair {
public:
    static ProfilePair uniform(int dimension = 1);
    static ProfilePair mathews_lakshmanan(double lambda);
    static ProfilePair singular_rational(double lambda);
    static ProfilePair morse_exp(double lambda);
    static ProfilePair ndim_mathews_lakshmanan(double lambda, int dimension);
    static ProfilePair power_law(double alpha, double sigma, int dimension);
    static ProfilePair custom(CustomProfile spec);

    Family family() const { return family_; }
    int dimension() const { return dimension_; }
    const Interval& domain() const { return domain_; }
    // Radial profiles take r = |x| as argument; 1D profiles take x itself.
    bool radial() const { return radial_; }
    double lambda() const { return lambda_; }
    double alpha() const { return alpha_; }
    double sigma() const { return sigma_; }
    std::string name() const { return family_name(family_); }

    bool in_domain(double r) const { return domain_.contains(r); }
    void require_in_domain(double r) const;
    double boundary_distance(double r) const { return domain_.boundary_distance(r); }

    double mass(double r) const;
    double mass_deriv(double r) const;
    double deformation(double r) const;
    double deformation_deriv(double r) const;

    double sqrt_mass(double r) const;
    double sqrt_deformation(double r) const;
    // sqrt(Q/m), the factor multiplying omega0^2 x in the restoring term.
    double restoring_factor(double r) const;
    // m'(r) / (2 r m(r)), the xdot^2 coefficient of the radial equations of
    // motion; evaluated by its limit at r = 0 where the quotient is 0/0.
    double radial_mass_slope(double r) const;
    // G(r) = sqrt(Q(r))*r, the scalar radius map; G'(r) = sqrt(m(r)).
    double forward_radius(double r) const;

private:
    ProfilePair() = default;

    Family family_ = Family::Uniform;
    int dimension_ = 1;
    bool radial_ = false;
    double lambda_ = 0.0;
    double alpha_ = 0.0;
    double sigma_ = 0.0;
    Interval domain_;
    CustomProfile custom_;
};

// Q(x) reconstructed from a mass profile: ((1/x) * integral_0^x sqrt(m))^2,
// adaptive quadrature at relative tolerance tol; returns m(0) at x = 0.
double deformation_from_mass(const ScalarFn& mass, double x, double tol = 1e-12);

// m(r) from Q and Q' through sqrt(m) = sqrt(Q)*(1 + Q'r/(2Q)); exact up to
// rounding. Throws DomainError when Q <= 0 or the parenthesis is <= 0.
double mass_from_deformation(const ScalarFn& deformation,
                             const ScalarFn& deformation_deriv, double r);

} // namespace pdmosc

#endif
