#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qmsd/app/config.hpp"

namespace qmsd::app {

struct RunReport {
    std::string command;
    std::vector<std::filesystem::path> files;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> warnings;
    bool verification_passed = true;
};

/// Default time grids, in units of t_b.
namespace default_grids {
inline const GridSpec kQuick{GridSpec::Kind::Linear, 0.0, 30.0, 301};
inline const GridSpec kFigure1{GridSpec::Kind::Linear, 0.0, 10.0, 512};
inline const GridSpec kFigure2{GridSpec::Kind::Geometric, 0.1, 2000.0, 601};
inline const GridSpec kMonteCarlo{GridSpec::Kind::Linear, 5.0, 100.0, 20};
inline const GridSpec kScattering{GridSpec::Kind::Linear, 0.0, 10.0, 201};
}  // namespace default_grids

RunReport run_scales(const RunConfig& cfg);
RunReport run_ideal(const RunConfig& cfg);
RunReport run_exact(const RunConfig& cfg);
RunReport run_breve(const RunConfig& cfg);
RunReport run_collision(const RunConfig& cfg);
RunReport run_mc_verify(const RunConfig& cfg);
RunReport run_scattering(const RunConfig& cfg);
RunReport run_figure1(const RunConfig& cfg);
RunReport run_figure2(const RunConfig& cfg);

/// Dispatch by subcommand name; throws ValidationError for unknown names.
RunReport run_command(const std::string& command, const RunConfig& cfg);

}  // namespace qmsd::app
