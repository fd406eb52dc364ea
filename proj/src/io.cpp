#include "orthoshell/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

namespace orthoshell {

namespace {

double need(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(std::string("missing or non-numeric field \"") + key + "\"");
    return j.at(key).get<double>();
}

json cvec(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json to_json(const OrthotropicMaterial& m) {
    return json{{"E1", m.E1},     {"E2", m.E2},     {"E3", m.E3},
                {"nu12", m.nu12}, {"nu21", m.nu21}, {"nu13", m.nu13},
                {"nu31", m.nu31}, {"nu23", m.nu23}, {"nu32", m.nu32},
                {"G", m.G}};
}

json to_json(const KLMaterial& m) {
    return json{{"E1", m.E1}, {"E2", m.E2}, {"nu12", m.nu12}, {"nu21", m.nu21}, {"G", m.G}};
}

json to_json(const StiffnessComponents& c) {
    return json{{"C1111", c.C1111}, {"C2222", c.C2222}, {"C3333", c.C3333},
                {"C1212", c.C1212}, {"C1122", c.C1122}, {"C1133", c.C1133},
                {"C2233", c.C2233}};
}

OrthotropicMaterial material_from_json(const json& j) {
    OrthotropicMaterial m;
    m.E1 = need(j, "E1");
    m.E2 = need(j, "E2");
    m.E3 = need(j, "E3");
    m.nu12 = need(j, "nu12");
    m.nu21 = need(j, "nu21");
    m.nu13 = need(j, "nu13");
    m.nu31 = need(j, "nu31");
    m.nu23 = need(j, "nu23");
    m.nu32 = need(j, "nu32");
    m.G = need(j, "G");
    return m;
}

KLMaterial kl_material_from_json(const json& j) {
    KLMaterial m;
    m.E1 = need(j, "E1");
    m.E2 = need(j, "E2");
    m.nu12 = need(j, "nu12");
    m.nu21 = need(j, "nu21");
    m.G = need(j, "G");
    return m;
}

StiffnessComponents stiffness_from_json(const json& j) {
    StiffnessComponents c;
    c.C1111 = need(j, "C1111");
    c.C2222 = need(j, "C2222");
    c.C3333 = need(j, "C3333");
    c.C1212 = need(j, "C1212");
    c.C1122 = need(j, "C1122");
    c.C1133 = need(j, "C1133");
    c.C2233 = need(j, "C2233");
    return c;
}

bool looks_like_stiffness(const json& j) { return j.contains("C1111"); }

json to_json(const EffectiveProperties& p) {
    return json{{"nu_CA", p.nu_CA},
                {"nu_CP", p.nu_CP},
                {"s_A", p.s_A},
                {"s_T", p.s_T},
                {"A_eps", p.A_eps},
                {"J_eps", p.J_eps},
                {"chi_eps", p.chi_eps},
                {"Lambda_axial", p.Lambda_axial},
                {"Theta", p.Theta},
                {"Gamma_radial", p.Gamma_radial}};
}

json to_json(const KLIdentifiedModuli& m) {
    return json{{"E1_eff", m.E1_eff}, {"E2_eff", m.E2_eff}, {"nu12", m.nu12}, {"nu21", m.nu21}};
}

KLExperimentRecord experiment_from_json(const json& j) {
    KLExperimentRecord r;
    r.w_T = need(j, "w_T");
    r.a1_slope_T = need(j, "a1_slope_T");
    r.w_P = need(j, "w_P");
    r.a1_slope_P = need(j, "a1_slope_P");
    r.p = need(j, "p");
    r.varpi = need(j, "varpi");
    r.rho_o = need(j, "rho_o");
    return r;
}

namespace {

const char* kind_name(LoadCase::Kind k) {
    switch (k) {
        case LoadCase::Kind::Torsion: return "torsion";
        case LoadCase::Kind::Traction: return "traction";
        case LoadCase::Kind::Pressure: return "pressure";
        case LoadCase::Kind::RimFlexure: return "flexure";
    }
    return "?";
}

json residual_json(const ResidualReport& r) {
    return json{{"field_eq", r.field_eq},
                {"statics_f11", r.statics_f11},
                {"bc_m11_minus", r.bc_m11_minus},
                {"bc_m11_plus", r.bc_m11_plus},
                {"bc_m11p_minus", r.bc_m11p_minus},
                {"bc_m11p_plus", r.bc_m11p_plus},
                {"integral", r.integral},
                {"gamma_eq", r.gamma_eq},
                {"max", r.max()}};
}

}  // namespace

json solution_summary(const AxisymSolution& sol) {
    json j;
    j["kind"] = kind_name(sol.load.kind);
    j["magnitude"] = sol.load.magnitude;
    j["theory"] = sol.law.kl ? "kl" : "full";
    j["gamma"] = sol.radial.gamma;
    j["w_p"] = sol.radial.w_p;
    j["alpha"] = json::array({cvec(sol.radial.alpha1), cvec(sol.radial.alpha2)});
    j["coeffs"] = json::array({cvec(sol.radial.c1), cvec(sol.radial.c2)});
    j["a1_slope"] = sol.a1_slope;
    j["residuals"] = residual_json(residuals(sol));
    return j;
}

json solution_summary(const TorsionSolution& sol, const ShellGeometry& g,
                      const StressLaw& law) {
    json j;
    j["kind"] = "torsion";
    j["magnitude"] = sol.t;
    j["theory"] = "full";
    j["gamma"] = 0.0;
    j["w_p"] = 0.0;
    j["alpha"] = json::array({cvec(0.0), cvec(0.0)});
    j["coeffs"] = json::array({cvec(0.0), cvec(0.0)});
    j["a2_slope"] = sol.a2_slope;
    j["Theta"] = sol.Theta;
    j["r_T"] = sol.r_T;
    j["residuals"] = residual_json(residuals(sol, g, law));
    return j;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_profile_csv(const std::string& path, const ShellGeometry& g,
                       const StressLaw& law, const AxisymmetricState& s, int stations) {
    if (stations < 3) throw ConfigError("write_profile_csv: need at least 3 stations");
    std::ofstream out(path, std::ios::binary);  // LF endings on every platform
    if (!out) throw ConfigError("cannot open output file " + path);
    out << "x1,a1,a2,w,gamma,F11,F22,F21,F33,M11,M21,M12,M22,F31\n";
    for (int i = 0; i < stations; ++i) {
        const double x1 = -g.l + 2.0 * g.l * i / (stations - 1);
        const ResultantSet r = resultants(g, law, s, x1);
        const double f31 = m11_prime(g, law, s, x1);
        out << format_number(x1) << ',' << format_number(s.a1(x1)) << ','
            << format_number(s.a2(x1)) << ',' << format_number(s.w(x1)) << ','
            << format_number(s.gamma) << ',' << format_number(r.F11) << ','
            << format_number(r.F22) << ',' << format_number(r.F21) << ','
            << format_number(r.F33) << ',' << format_number(r.M11) << ','
            << format_number(r.M21) << ',' << format_number(r.M12) << ','
            << format_number(r.M22) << ',' << format_number(f31) << '\n';
    }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace orthoshell
