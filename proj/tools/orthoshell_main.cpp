#include <CLI11.hpp>

#include "orthoshell/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"orthoshell: closed-form mechanics of orthotropic unshearable "
                 "cylindrical shells"};
    app.require_subcommand(1);

    orthoshell::Command cmd;
    int stations = -1;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", cmd.config_path, "JSON configuration file");
        if (needs_config) opt->required();
        sub->add_option("--out", cmd.out_dir, "output directory");
        sub->add_option("--stations", stations, "number of profile stations");
        sub->add_flag("--kl", cmd.kl, "use the Kirchhoff-Love theory");
    };

    auto* mat = app.add_subcommand("material", "validate or convert a material");
    mat->add_option("action", cmd.subarg, "check | convert")->required();
    add_common(mat, true);

    auto* solve = app.add_subcommand("solve", "solve one axisymmetric problem");
    solve->add_option("problem", cmd.subarg, "torsion | traction | pressure | flexure")
        ->required();
    add_common(solve, true);

    auto* props = app.add_subcommand("props", "effective properties record");
    add_common(props, true);

    auto* identify = app.add_subcommand("identify", "KL moduli from a virtual experiment");
    add_common(identify, true);

    auto* verify = app.add_subcommand("verify", "closed form vs finite-difference oracle");
    add_common(verify, true);

    CLI11_PARSE(app, argc, argv);

    cmd.verb = app.get_subcommands().front()->get_name();
    if (stations > 0) cmd.stations = stations;
    return orthoshell::run(cmd);
}
