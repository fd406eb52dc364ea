#include "orthoshell/effective.hpp"

#include <cmath>

namespace orthoshell {

namespace {

struct SlenderConsts {
    double gbar, wbar, lamc;  // traction: gamma = -gbar lf, w = -wbar lf, Lambda = lamc lf
    double gtil, wtil, a1c;   // pressure: gamma = gtil lfp, w = wtil lfp, a1' = a1c lfp
};

// Large-slenderness limits from the pointwise integral relation (the
// boundary-layer coefficients vanish as l -> infinity).
SlenderConsts slender_consts(const ShellGeometry& g, const StressLaw& q) {
    g.require_valid();
    const double rho = g.rho_o;
    const double L = log_factor(g.thinness());
    const double n1 = q.q12 / q.q11, n2 = q.q13 / q.q11;
    const BvpConstants k = bvp_constants(g, q);
    const double W1c = q.q22 * (1.0 - L) - q.q13 * n1 + q.q23;
    const double G1c = q.q33 - q.q22 * (1.0 - L) - q.q13 * n2;
    const double L1c = q.q13 / q.one_minus;
    const double D = q.Delta;
    const double den = G1c - W1c * k.d / k.b;
    SlenderConsts s;
    s.gbar = D * (L1c - W1c * k.c / k.b) / den;
    s.wbar = rho * (k.c / k.b * D - k.d / k.b * s.gbar);
    s.lamc = D / q.one_minus + n1 * s.wbar / rho + n2 * s.gbar;
    s.gtil = -W1c * (k.c_tilde / k.b) * D / den;
    s.wtil = rho * (k.c_tilde / k.b * D - k.d / k.b * s.gtil);
    s.a1c = -(n1 * s.wtil / rho + n2 * s.gtil);
    return s;
}

}  // namespace

SlenderTraction slender_traction(const ShellGeometry& g, const OrthotropicMaterial& m,
                                 double p) {
    const StressLaw q = StressLaw::from(m);
    const SlenderConsts s = slender_consts(g, q);
    const double lf = p / (2.0 * q.E1 * g.eps);
    return {-s.gbar * lf, -s.wbar * lf, s.lamc * lf};
}

SlenderPressure slender_pressure(const ShellGeometry& g, const OrthotropicMaterial& m,
                                 double varpi) {
    const StressLaw q = StressLaw::from(m);
    const SlenderConsts s = slender_consts(g, q);
    const double lf = g.rho_o * varpi / (2.0 * q.E1 * g.eps);
    return {s.gtil * lf, s.wtil * lf, s.a1c * lf};
}

std::pair<double, double> contraction_moduli(const ShellGeometry& g,
                                             const OrthotropicMaterial& m) {
    const SlenderConsts s = slender_consts(g, StressLaw::from(m));
    const double nu_ca = (s.wbar / g.rho_o) / s.lamc;
    const double nu_cp = -s.a1c / (s.wtil / g.rho_o);
    return {nu_ca, nu_cp};
}

double stiffness_traction(const ShellGeometry& g, const OrthotropicMaterial& m) {
    const StressLaw q = StressLaw::from(m);
    const SlenderConsts s = slender_consts(g, q);
    const double area = 4.0 * M_PI * g.rho_o * g.eps;
    return q.E1 * area / s.lamc;
}

namespace {
double torsion_stiffness_impl(const ShellGeometry& g, double G) {
    g.require_valid();
    const double x = g.thinness();
    const double J = 4.0 * M_PI * g.rho_o * g.rho_o * g.rho_o * g.eps;
    return G * J * (1.0 + x * x);
}

double wave_speed_impl(const ShellGeometry& g, double G, double delta_o) {
    if (!(delta_o > 0.0)) throw DomainError("torsion_wave_speed: density must be positive");
    const double x2 = g.thinness() * g.thinness();
    return std::sqrt(G / delta_o * (1.0 + x2) / (1.0 + 2.0 / 3.0 * x2));
}
}  // namespace

double stiffness_torsion(const ShellGeometry& g, const OrthotropicMaterial& m) {
    return torsion_stiffness_impl(g, m.G);
}

double stiffness_torsion(const ShellGeometry& g, const KLMaterial& m) {
    return torsion_stiffness_impl(g, m.G);
}

double torsion_wave_speed(const ShellGeometry& g, const OrthotropicMaterial& m,
                          double delta_o) {
    return wave_speed_impl(g, m.G, delta_o);
}

double torsion_wave_speed(const ShellGeometry& g, const KLMaterial& m, double delta_o) {
    return wave_speed_impl(g, m.G, delta_o);
}

EffectiveProperties effective_properties(const ShellGeometry& g,
                                         const OrthotropicMaterial& m, double t,
                                         double p, double varpi) {
    EffectiveProperties ep;
    const auto nus = contraction_moduli(g, m);
    ep.nu_CA = nus.first;
    ep.nu_CP = nus.second;
    ep.s_A = stiffness_traction(g, m);
    ep.s_T = stiffness_torsion(g, m);
    ep.A_eps = 4.0 * M_PI * g.rho_o * g.eps;
    ep.J_eps = 4.0 * M_PI * g.rho_o * g.rho_o * g.rho_o * g.eps;
    const double x = g.thinness();
    ep.chi_eps = 1.0 / (1.0 + x * x);
    ep.Lambda_axial = slender_traction(g, m, p).Lambda;
    ep.Theta = solve_torsion(g, m, t).Theta;
    ep.Gamma_radial = slender_pressure(g, m, varpi).w / g.rho_o;
    return ep;
}

}  // namespace orthoshell
