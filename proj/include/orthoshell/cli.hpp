#pragma once

#include <optional>
#include <string>

#include "orthoshell/io.hpp"

namespace orthoshell {

/// Parsed command line, independent of the argv-parsing front end so the
/// dispatch logic is directly testable.
struct Command {
    std::string verb;           // material | solve | props | identify | verify
    std::string subarg;         // check/convert or torsion/traction/pressure/flexure
    std::string config_path;
    std::string out_dir = ".";
    std::optional<int> stations;
    bool kl = false;
};

struct RunConfig {
    ShellGeometry geometry;
    std::optional<OrthotropicMaterial> material;
    std::optional<KLMaterial> kl_material;
    std::optional<LoadCase> load;
    bool kl = false;
    int stations = 201;
};

RunConfig parse_config(const json& j, bool kl_flag);

/// Exit status: 0 success, 2 config error, 3 solver error, 4 verification
/// failure. Diagnostics go to stderr as a single line.
int run(const Command& cmd);

}  // namespace orthoshell
