#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "eelab/cli/config.hpp"

namespace eelab::cli {

// Artifacts written into config.output_path (created if missing):
//
//   electron      electron_profile.{csv,json}, electron_summary.json
//   epr           epr_curve.{csv,json}, chsh.json, singles.json, pair.json
//                 (subset selected by epr.mode)
//   sterngerlach  trajectory.{csv,json}, sterngerlach.json
//   budget        budget.json; a readable table goes to `log`
//
// Every file carries the tool version and the resolved config: JSON under
// "tool" and "config", CSV as leading '#' comment lines before the header.
// Physics errors propagate as DomainError/UnsupportedConfiguration, write
// failures as IoError.
std::vector<std::filesystem::path> run(const RunConfig& config, std::ostream& log);

}  // namespace eelab::cli
