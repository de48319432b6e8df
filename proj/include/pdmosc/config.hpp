#ifndef PDMOSC_CONFIG_HPP
#define PDMOSC_CONFIG_HPP

#include "pdmosc/integrate.hpp"
#include "pdmosc/transform.hpp"

#include <iosfwd>
#include <string>

namespace pdmosc {

// Scenario description parsed from a flat key = value file. Unknown keys,
// duplicates and malformed values are rejected with file:line anchored
// ConfigError messages.
//
// Keys:
//   family      uniform | mathews_lakshmanan | singular_rational | morse_exp
//               | ndim_mathews_lakshmanan | power_law            (required)
//   lambda      profile parameter of the lambda families
//   alpha sigma power_law parameters
//   dimension   integer >= 1 (1D families fix it to 1)
//   omega0      undamped angular frequency (default 1)
//   eta         damping ratio, or
//   b, m0       damping coefficient and mass, eta = b/(2 m0 omega0)
//   amplitudes  comma/space separated list (alias: amplitude)
//   phase       reference phase, used when eta = 0
//   branch      plus | minus
//   form        paper | ic_consistent
//   t0, t1      time span (defaults 0, 20)
//   samples     output rows (default 2001)
//   rel_tol, abs_tol   integrator tolerances
//   source      analytic | integrated  (default analytic)
//   out_dir     output directory (default "out")
//   svg         true | false, emit plot.svg (default false)
struct ScenarioConfig {
    std::string family;
    double lambda = 0.0;
    double alpha = 0.0;
    double sigma = 0.0;
    int dimension = 1;
    double omega0 = 1.0;
    double eta = 0.0;
    double m0 = 1.0;
    Vec amplitudes;
    double phase = 0.0;
    Branch branch = Branch::Plus;
    SolutionForm form = SolutionForm::Paper;
    double t0 = 0.0;
    double t1 = 20.0;
    int samples = 2001;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    bool integrated = false;
    std::string out_dir = "out";
    bool svg = false;

    static ScenarioConfig parse_file(const std::string& path);
    static ScenarioConfig parse(std::istream& in, const std::string& filename);

    ProfilePair profile() const;
    PdmScenario scenario() const;
    IntegratorConfig integrator() const;
};

} // namespace pdmosc

#endif
