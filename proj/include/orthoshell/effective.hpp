#pragma once

#include "orthoshell/bvp.hpp"

namespace orthoshell {

/// Slender-shell probe properties: contraction moduli, traction/torsion
/// stiffnesses and the response measures under the reference loads.
struct EffectiveProperties {
    double nu_CA = 0;        ///< -E22/E11 under traction
    double nu_CP = 0;        ///< -E11/E22 under pressure
    double s_A = 0;          ///< P / Lambda
    double s_T = 0;          ///< T / Theta
    double A_eps = 0;        ///< cross-section area 4 pi rho_o eps
    double J_eps = 0;        ///< polar moment 4 pi rho_o^3 eps
    double chi_eps = 0;      ///< torsion factor (1 + eps^2/rho_o^2)^{-1}
    double Lambda_axial = 0; ///< axial strain under the given p
    double Theta = 0;        ///< twist per unit length under the given t
    double Gamma_radial = 0; ///< radial contraction measure under the given varpi
};

struct SlenderTraction {
    double gamma = 0;
    double w = 0;       ///< interior radial deflection (constant)
    double Lambda = 0;  ///< axial strain a1'
};

struct SlenderPressure {
    double gamma = 0;
    double w = 0;
    double a1_slope = 0;
};

/// Interior (boundary-layer-free) solution of the traction problem in the
/// large-slenderness limit; exact formulas, not numerical limits.
SlenderTraction slender_traction(const ShellGeometry& g, const OrthotropicMaterial& m,
                                 double p);
SlenderPressure slender_pressure(const ShellGeometry& g, const OrthotropicMaterial& m,
                                 double varpi);

/// Effective contraction moduli (nu_CA, nu_CP).
std::pair<double, double> contraction_moduli(const ShellGeometry& g,
                                             const OrthotropicMaterial& m);

double stiffness_traction(const ShellGeometry& g, const OrthotropicMaterial& m);
double stiffness_torsion(const ShellGeometry& g, const OrthotropicMaterial& m);
double stiffness_torsion(const ShellGeometry& g, const KLMaterial& m);

/// Speed of torsional waves; delta_o is the mass density per unit volume.
double torsion_wave_speed(const ShellGeometry& g, const OrthotropicMaterial& m,
                          double delta_o);
double torsion_wave_speed(const ShellGeometry& g, const KLMaterial& m, double delta_o);

/// Full record under reference loads (t, p, varpi).
EffectiveProperties effective_properties(const ShellGeometry& g,
                                         const OrthotropicMaterial& m, double t,
                                         double p, double varpi);

}  // namespace orthoshell
