#pragma once
#include <string>
#include <vector>

#include "orisfso/sweep.hpp"

namespace orisfso::sweep {

// One curve family of a canned experiment; the suffix distinguishes the
// output file when a preset expands to several runs.
struct PresetRun {
    std::string suffix;
    Scenario scenario;
};

std::vector<std::string> preset_names();

// Throws std::invalid_argument for an unknown name.  fig3..fig8:
//   fig3  outage vs SNR, one full-power link, three path lengths
//   fig4  outage vs SNR at three turbulence strengths, incl. the TDMA baseline
//   fig5  outage vs power split a1 at three mean SNRs
//   fig6  rx2 outage vs its path length, two Cn2 values x two power splits
//   fig7  outage vs beam split B1 at two mean SNRs
//   fig8  outage vs common sway at three turbulence strengths
std::vector<PresetRun> preset_runs(const std::string& name);

}  // namespace orisfso::sweep
