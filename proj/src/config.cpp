#include "pdmosc/config.hpp"
#include "pdmosc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace pdmosc {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

struct Anchor {
    std::string file;
    int line;
    std::string at() const { return file + ":" + std::to_string(line); }
};

[[noreturn]] void fail(const Anchor& a, const std::string& msg) {
    throw ConfigError(a.at() + ": " + msg);
}

double parse_double(const Anchor& a, const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail(a, "key '" + key + "': cannot parse '" + v + "' as a number");
    }
    if (pos != v.size())
        fail(a, "key '" + key + "': trailing characters in '" + v + "'");
    return out;
}

int parse_int(const Anchor& a, const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    int out = 0;
    try {
        out = std::stoi(v, &pos);
    } catch (const std::exception&) {
        fail(a, "key '" + key + "': cannot parse '" + v + "' as an integer");
    }
    if (pos != v.size())
        fail(a, "key '" + key + "': trailing characters in '" + v + "'");
    return out;
}

bool parse_bool(const Anchor& a, const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    fail(a, "key '" + key + "': expected true/false, got '" + v + "'");
}

Vec parse_list(const Anchor& a, const std::string& key, const std::string& v) {
    Vec out;
    std::string item;
    std::string normalized = v;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream items(normalized);
    while (items >> item)
        out.push_back(parse_double(a, key, item));
    if (out.empty())
        fail(a, "key '" + key + "': empty list");
    return out;
}

} // namespace

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open file");
    return parse(in, path);
}

ScenarioConfig ScenarioConfig::parse(std::istream& in, const std::string& filename) {
    ScenarioConfig cfg;
    std::map<std::string, int> seen;
    bool have_family = false, have_eta = false, have_b = false;
    double b_value = 0.0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        Anchor a{filename, lineno};
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(a, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(a, "missing key before '='");
        if (value.empty())
            fail(a, "key '" + key + "': missing value");
        if (auto it = seen.find(key); it != seen.end())
            fail(a, "key '" + key + "' already set on line " + std::to_string(it->second));
        seen[key] = lineno;

        if (key == "family") {
            cfg.family = value;
            have_family = true;
        } else if (key == "lambda") {
            cfg.lambda = parse_double(a, key, value);
        } else if (key == "alpha") {
            cfg.alpha = parse_double(a, key, value);
        } else if (key == "sigma") {
            cfg.sigma = parse_double(a, key, value);
        } else if (key == "dimension") {
            cfg.dimension = parse_int(a, key, value);
        } else if (key == "omega0") {
            cfg.omega0 = parse_double(a, key, value);
        } else if (key == "eta") {
            cfg.eta = parse_double(a, key, value);
            have_eta = true;
        } else if (key == "b") {
            b_value = parse_double(a, key, value);
            have_b = true;
        } else if (key == "m0") {
            cfg.m0 = parse_double(a, key, value);
        } else if (key == "amplitudes" || key == "amplitude") {
            cfg.amplitudes = parse_list(a, key, value);
        } else if (key == "phase") {
            cfg.phase = parse_double(a, key, value);
        } else if (key == "branch") {
            if (value == "plus")
                cfg.branch = Branch::Plus;
            else if (value == "minus")
                cfg.branch = Branch::Minus;
            else
                fail(a, "key 'branch': expected plus or minus, got '" + value + "'");
        } else if (key == "form") {
            if (value == "paper")
                cfg.form = SolutionForm::Paper;
            else if (value == "ic_consistent")
                cfg.form = SolutionForm::IcConsistent;
            else
                fail(a, "key 'form': expected paper or ic_consistent, got '" + value + "'");
        } else if (key == "t0") {
            cfg.t0 = parse_double(a, key, value);
        } else if (key == "t1") {
            cfg.t1 = parse_double(a, key, value);
        } else if (key == "samples") {
            cfg.samples = parse_int(a, key, value);
        } else if (key == "rel_tol") {
            cfg.rel_tol = parse_double(a, key, value);
        } else if (key == "abs_tol") {
            cfg.abs_tol = parse_double(a, key, value);
        } else if (key == "source") {
            if (value == "analytic")
                cfg.integrated = false;
            else if (value == "integrated")
                cfg.integrated = true;
            else
                fail(a, "key 'source': expected analytic or integrated, got '" + value + "'");
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else if (key == "svg") {
            cfg.svg = parse_bool(a, key, value);
        } else {
            fail(a, "unknown key '" + key + "'");
        }
    }

    Anchor end{filename, lineno};
    if (!have_family)
        fail(end, "missing required key 'family'");
    const Anchor family_anchor{filename, seen["family"]};
    const bool known_family =
        cfg.family == "uniform" || cfg.family == "mathews_lakshmanan" ||
        cfg.family == "singular_rational" || cfg.family == "morse_exp" ||
        cfg.family == "ndim_mathews_lakshmanan" || cfg.family == "power_law";
    if (!known_family)
        fail(family_anchor, "unknown family '" + cfg.family + "'");
    const bool one_dimensional =
        cfg.family == "mathews_lakshmanan" || cfg.family == "singular_rational" ||
        cfg.family == "morse_exp";
    if (one_dimensional && cfg.dimension != 1)
        fail(Anchor{filename, seen.count("dimension") ? seen["dimension"] : lineno},
             "family " + cfg.family + " is one-dimensional");
    if (have_eta && have_b)
        fail(end, "keys 'eta' and 'b' are mutually exclusive");
    if (have_b) {
        if (!(cfg.omega0 > 0.0) || !(cfg.m0 > 0.0))
            fail(end, "'b' needs positive omega0 and m0");
        cfg.eta = b_value / (2.0 * cfg.m0 * cfg.omega0);
    }
    if (cfg.amplitudes.empty())
        cfg.amplitudes = {1.0};
    if (cfg.samples < 2)
        fail(end, "'samples' must be at least 2");
    return cfg;
}

ProfilePair ScenarioConfig::profile() const {
    auto reject_dimension = [this](const char* fam) {
        if (dimension != 1)
            throw ConfigError(std::string("family ") + fam + " is one-dimensional");
    };
    if (family == "uniform")
        return ProfilePair::uniform(dimension);
    if (family == "mathews_lakshmanan") {
        reject_dimension("mathews_lakshmanan");
        return ProfilePair::mathews_lakshmanan(lambda);
    }
    if (family == "singular_rational") {
        reject_dimension("singular_rational");
        return ProfilePair::singular_rational(lambda);
    }
    if (family == "morse_exp") {
        reject_dimension("morse_exp");
        return ProfilePair::morse_exp(lambda);
    }
    if (family == "ndim_mathews_lakshmanan")
        return ProfilePair::ndim_mathews_lakshmanan(lambda, dimension);
    if (family == "power_law")
        return ProfilePair::power_law(alpha, sigma, dimension);
    throw ConfigError("unknown family '" + family + "'");
}

PdmScenario ScenarioConfig::scenario() const {
    AmplitudeVector amps(amplitudes);
    amps.phase = phase;
    PdmScenario s(profile(), DhoParams(omega0, eta, m0), std::move(amps));
    s.form = form;
    s.branch = branch;
    s.t0 = t0;
    s.t1 = t1;
    s.validate();
    return s;
}

IntegratorConfig ScenarioConfig::integrator() const {
    IntegratorConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    return cfg;
}

} // namespace pdmosc
