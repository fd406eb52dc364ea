#include "orthoshell/cli.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace orthoshell {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

LoadCase::Kind kind_from_string(const std::string& s) {
    if (s == "torsion") return LoadCase::Kind::Torsion;
    if (s == "traction") return LoadCase::Kind::Traction;
    if (s == "pressure") return LoadCase::Kind::Pressure;
    if (s == "flexure" || s == "rim_flexure") return LoadCase::Kind::RimFlexure;
    throw ConfigError("unknown load kind \"" + s + "\"");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << text;
}

}  // namespace

RunConfig parse_config(const json& j, bool kl_flag) {
    RunConfig cfg;
    if (!j.contains("geometry")) throw ConfigError("config: missing \"geometry\"");
    const json& jg = j.at("geometry");
    auto need = [](const json& o, const char* k) {
        if (!o.contains(k) || !o.at(k).is_number())
            throw ConfigError(std::string("config: missing or non-numeric \"") + k + "\"");
        return o.at(k).get<double>();
    };
    cfg.geometry.rho_o = need(jg, "rho_o");
    cfg.geometry.eps = need(jg, "eps");
    cfg.geometry.l = need(jg, "l");
    try {
        cfg.geometry.require_valid();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    cfg.kl = kl_flag || (j.contains("theory") && j.at("theory") == "kl");
    if (j.contains("material") && j.contains("kl_material"))
        throw ConfigError("config: give either \"material\" or \"kl_material\", not both");
    if (j.contains("material")) cfg.material = material_from_json(j.at("material"));
    if (j.contains("kl_material")) cfg.kl_material = kl_material_from_json(j.at("kl_material"));
    if (cfg.kl && !cfg.kl_material) {
        if (cfg.material)
            cfg.kl_material = kl_reduce(*cfg.material);
        else
            throw ConfigError("config: KL theory needs \"kl_material\" or \"material\"");
    }
    if (!cfg.kl && !cfg.material)
        throw ConfigError("config: full theory needs \"material\"");
    if (j.contains("load")) {
        const json& jl = j.at("load");
        if (!jl.contains("kind") || !jl.at("kind").is_string())
            throw ConfigError("config: load.kind must be a string");
        cfg.load = LoadCase{kind_from_string(jl.at("kind").get<std::string>()),
                            need(jl, "magnitude")};
    }
    if (j.contains("stations")) {
        if (!j.at("stations").is_number_integer())
            throw ConfigError("config: stations must be an integer");
        cfg.stations = j.at("stations").get<int>();
    }
    if (cfg.stations < 3) throw ConfigError("config: stations must be >= 3");
    return cfg;
}

namespace {

void warn_load_scale(const RunConfig& cfg, const LoadCase& load) {
    const double e1 = cfg.material ? cfg.material->E1 : cfg.kl_material->E1;
    if (std::abs(load.magnitude) / (e1 * cfg.geometry.eps) > 0.01)
        std::cerr << "warning: load magnitude exceeds 0.01 * E1 * eps; the linear "
                     "theory assumes O(eps) loads\n";
}

int cmd_material(const Command& cmd) {
    json j = load_json(cmd.config_path);
    if (j.contains("material")) j = j.at("material");
    if (cmd.subarg == "check") {
        const OrthotropicMaterial m = material_from_json(j);
        const ValidationReport rep = validate(m);
        json out;
        out["valid"] = rep.ok();
        out["violations"] = json::array();
        for (const auto& v : rep.issues)
            out["violations"].push_back({{"constraint", v.constraint}, {"residual", v.residual}});
        std::cout << dump_json(out);
        return rep.ok() ? 0 : 4;
    }
    if (cmd.subarg == "convert") {
        json out;
        if (looks_like_stiffness(j))
            out = to_json(technical_from_stiffness(stiffness_from_json(j)));
        else
            out = to_json(stiffness_from_technical(material_from_json(j)));
        std::cout << dump_json(out);
        return 0;
    }
    throw ConfigError("material: expected subcommand check|convert");
}

int cmd_solve(const Command& cmd) {
    const RunConfig cfg = parse_config(load_json(cmd.config_path), cmd.kl);
    const LoadCase::Kind kind = kind_from_string(cmd.subarg);
    if (!cfg.load) throw ConfigError("config: missing \"load\"");
    if (cfg.load->kind != kind)
        throw ConfigError("config load kind does not match the solve subcommand");
    const double mag = cfg.load->magnitude;
    const LoadCase load{kind, mag};
    warn_load_scale(cfg, load);
    const int stations = cmd.stations.value_or(cfg.stations);
    std::filesystem::create_directories(cmd.out_dir);
    const std::string base = cmd.out_dir + "/" + cmd.subarg + (cfg.kl ? "_kl" : "");
    const StressLaw law =
        cfg.kl ? StressLaw::from(*cfg.kl_material) : StressLaw::from(*cfg.material);

    if (kind == LoadCase::Kind::Torsion) {
        const TorsionSolution sol = torsion_from_law(cfg.geometry, law, mag);
        json summary = solution_summary(sol, cfg.geometry, law);
        summary["theory"] = cfg.kl ? "kl" : "full";
        write_profile_csv(base + "_profile.csv", cfg.geometry, law, sol.state(), stations);
        write_text(base + "_summary.json", dump_json(summary));
        std::cout << dump_json(summary);
        return 0;
    }

    const AxisymSolution sol = solve_radial_problem(cfg.geometry, law, kind, mag);
    write_profile_csv(base + "_profile.csv", cfg.geometry, law, sol.state(), stations);
    const json summary = solution_summary(sol);
    write_text(base + "_summary.json", dump_json(summary));
    std::cout << dump_json(summary);
    return 0;
}

int cmd_props(const Command& cmd) {
    const RunConfig cfg = parse_config(load_json(cmd.config_path), cmd.kl);
    double t = 1.0, p = 1.0, varpi = 1.0;
    if (cfg.load) {
        switch (cfg.load->kind) {
            case LoadCase::Kind::Torsion: t = cfg.load->magnitude; break;
            case LoadCase::Kind::Traction: p = cfg.load->magnitude; break;
            case LoadCase::Kind::Pressure: varpi = cfg.load->magnitude; break;
            default: break;
        }
    }
    json out;
    if (cfg.kl) {
        const KLEffective e = kl_effective(cfg.geometry, *cfg.kl_material);
        out = json{{"nu_CA", e.nu_CA}, {"nu_CP", e.nu_CP}, {"s_A", e.s_A}, {"s_T", e.s_T}};
        out["theory"] = "kl";
    } else {
        out = to_json(effective_properties(cfg.geometry, *cfg.material, t, p, varpi));
        out["theory"] = "full";
    }
    std::cout << dump_json(out);
    return 0;
}

int cmd_identify(const Command& cmd) {
    json j = load_json(cmd.config_path);
    if (j.contains("experiment")) j = j.at("experiment");
    const KLExperimentRecord rec = experiment_from_json(j);
    const KLIdentifiedModuli mods = kl_identify_moduli(rec);
    json out = to_json(mods);
    out["consistency_residual"] = kl_consistency_check(rec);
    std::cout << dump_json(out);
    return 0;
}

int cmd_verify(const Command& cmd) {
    const RunConfig cfg = parse_config(load_json(cmd.config_path), cmd.kl);
    const StressLaw law =
        cfg.kl ? StressLaw::from(*cfg.kl_material) : StressLaw::from(*cfg.material);
    const int nfd = 2049;
    const double tol = 1e-5;
    bool all_ok = true;
    json table = json::array();

    std::vector<LoadCase> cases;
    for (auto kind : {LoadCase::Kind::Torsion, LoadCase::Kind::Traction,
                      LoadCase::Kind::Pressure, LoadCase::Kind::RimFlexure}) {
        double mag = 1.0;
        if (cfg.load && cfg.load->kind == kind) mag = cfg.load->magnitude;
        cases.push_back({kind, mag});
    }

    for (const LoadCase& load : cases) {
        json row;
        const GridSolution fd = fd_solve_converged(cfg.geometry, law, load, nfd);
        double dev_w = 0.0, dev_a1 = 0.0, res_max = 0.0;
        if (load.kind == LoadCase::Kind::Torsion) {
            const double slope =
                load.magnitude /
                (2.0 * cfg.geometry.eps *
                 (1.0 + cfg.geometry.thinness() * cfg.geometry.thinness()) * law.G);
            double scale = std::abs(slope * cfg.geometry.l), dmax = 0.0;
            for (int j = 0; j < fd.n; ++j)
                dmax = std::max(dmax, std::abs(fd.a2[j] - slope * fd.x[j]));
            dev_w = dmax / std::max(scale, 1e-300);
            row["kind"] = "torsion";
        } else {
            const AxisymSolution sol =
                solve_radial_problem(cfg.geometry, law, load.kind, load.magnitude);
            double wmax = 0.0, amax = 0.0, dw = 0.0, da = 0.0;
            for (int j = 0; j < fd.n; ++j) {
                const double wc = sol.w(fd.x[j]);
                const double ac = sol.a1(fd.x[j]);
                wmax = std::max(wmax, std::abs(wc));
                amax = std::max(amax, std::abs(ac));
                dw = std::max(dw, std::abs(wc - fd.w[j]));
                da = std::max(da, std::abs(ac - fd.a1[j]));
            }
            dev_w = dw / std::max(wmax, 1e-300);
            dev_a1 = da / std::max(amax, 1e-300);
            const ResidualReport rep = residuals(sol);
            res_max = rep.max();
            row["kind"] = solution_summary(sol)["kind"];
            row["residuals"] = solution_summary(sol)["residuals"];
        }
        const ConvergenceReport conv = convergence_order(cfg.geometry, law, load, 513);
        const bool order_ok = conv.exact || std::abs(conv.order - 2.0) < 0.3;
        const bool ok = dev_w <= tol && dev_a1 <= tol && order_ok;
        row["dev_w"] = dev_w;
        row["dev_a1"] = dev_a1;
        row["residual_max"] = res_max;
        row["observed_order"] = conv.exact ? json("exact") : json(conv.order);
        row["pass"] = ok;
        table.push_back(row);
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << row["kind"].get<std::string>()
                  << "  dev_w=" << format_number(dev_w)
                  << "  dev_a1=" << format_number(dev_a1) << "\n";
    }
    json out;
    out["tolerance"] = tol;
    out["n"] = nfd;
    out["cases"] = table;
    out["pass"] = all_ok;
    std::filesystem::create_directories(cmd.out_dir);
    write_text(cmd.out_dir + "/verify_report.json", dump_json(out));
    return all_ok ? 0 : 4;
}

}  // namespace

int run(const Command& cmd) {
    try {
        if (cmd.verb == "material") return cmd_material(cmd);
        if (cmd.verb == "solve") return cmd_solve(cmd);
        if (cmd.verb == "props") return cmd_props(cmd);
        if (cmd.verb == "identify") return cmd_identify(cmd);
        if (cmd.verb == "verify") return cmd_verify(cmd);
        throw ConfigError("unknown subcommand \"" + cmd.verb + "\"");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace orthoshell
