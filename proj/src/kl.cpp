#include "orthoshell/kl.hpp"

#include <cmath>

namespace orthoshell {

double kl_delta(const ShellGeometry& g, const KLMaterial& m) {
    g.require_valid();
    const double L = log_factor(g.thinness());
    const double pp = m.nu12 * m.nu21;
    const double den = L - pp;
    if (!(den > 0.0)) throw DomainError("kl_delta: nu12*nu21 >= L(eps/rho_o)");
    return (1.0 - pp) / den;
}

AxisymSolution kl_solve_traction(const ShellGeometry& g, const KLMaterial& m, double p) {
    return solve_radial_problem(g, StressLaw::from(m), LoadCase::Kind::Traction, p);
}

AxisymSolution kl_solve_pressure(const ShellGeometry& g, const KLMaterial& m, double varpi) {
    return solve_radial_problem(g, StressLaw::from(m), LoadCase::Kind::Pressure, varpi);
}

AxisymSolution kl_solve_rim_flexure(const ShellGeometry& g, const KLMaterial& m, double mo) {
    return solve_radial_problem(g, StressLaw::from(m), LoadCase::Kind::RimFlexure, mo);
}

KLEffective kl_effective(const ShellGeometry& g, const KLMaterial& m) {
    const double dl = kl_delta(g, m);
    const double corr = 1.0 - m.nu12 * m.nu21 * (1.0 - dl);
    KLEffective e;
    e.nu_CA = dl * m.nu12 / corr;
    e.nu_CP = m.nu21;
    e.s_A = m.E1 * 4.0 * M_PI * g.rho_o * g.eps / corr;
    e.s_T = stiffness_torsion(g, m);
    return e;
}

KLIdentifiedModuli kl_identify_moduli(const KLExperimentRecord& rec) {
    if (std::abs(rec.a1_slope_T) < 1e-300 || std::abs(rec.w_P) < 1e-300)
        throw DegenerateExperiment("kl_identify_moduli: vanishing a1_slope_T or w_P");
    KLIdentifiedModuli out;
    out.E1_eff = rec.p / (2.0 * rec.a1_slope_T);
    out.E2_eff = rec.rho_o * rec.rho_o * rec.varpi / (2.0 * rec.w_P);
    out.nu12 = -rec.w_T / (rec.rho_o * rec.a1_slope_T);
    out.nu21 = -rec.rho_o * rec.a1_slope_P / rec.w_P;
    return out;
}

double kl_consistency_check(const KLExperimentRecord& rec) {
    if (std::abs(rec.w_T) < 1e-300 || std::abs(rec.a1_slope_P) < 1e-300)
        throw DegenerateExperiment("kl_consistency_check: vanishing w_T or a1_slope_P");
    const double r1 = rec.p / rec.w_T;
    const double r2 = rec.varpi / rec.a1_slope_P;
    return std::abs(r1 - r2) / std::max({std::abs(r1), std::abs(r2), 1e-300});
}

KLExperimentRecord kl_virtual_experiment(const ShellGeometry& g, const KLMaterial& m,
                                         double p, double varpi) {
    const AxisymSolution st = kl_solve_traction(g, m, p);
    const AxisymSolution sp = kl_solve_pressure(g, m, varpi);
    KLExperimentRecord rec;
    rec.w_T = st.w(0.0);
    rec.a1_slope_T = st.a1(0.0, 1);
    rec.w_P = sp.w(0.0);
    rec.a1_slope_P = sp.a1(0.0, 1);
    rec.p = p;
    rec.varpi = varpi;
    rec.rho_o = g.rho_o;
    return rec;
}

}  // namespace orthoshell
