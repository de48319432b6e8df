#ifndef PDMOSC_PRESETS_HPP
#define PDMOSC_PRESETS_HPP

#include "pdmosc/transform.hpp"

#include <string>
#include <vector>

namespace pdmosc {

// One curve of a figure preset; the label names the swept parameter value
// and becomes part of the emitted filenames.
struct PresetMember {
    std::string label;
    PdmScenario scenario;
};

struct FigurePreset {
    std::string name;
    std::string description;
    std::vector<PresetMember> members;
};

// Built-in parameter sets of figures 1-5: eta sweeps, amplitude sweeps and
// profile-parameter sweeps, one member per swept value.
const std::vector<FigurePreset>& figure_presets();
const FigurePreset* find_preset(const std::string& name);

// Writes <out_dir>/<preset>/<label>_trajectory.csv and _phase.csv for every
// member (closed-form sampling, `samples` uniform rows); returns the list of
// files written.
std::vector<std::string> run_figure_preset(const FigurePreset& preset,
                                           const std::string& out_dir,
                                           int samples = 2001, bool svg = false);

} // namespace pdmosc

#endif
