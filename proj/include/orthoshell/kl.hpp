#pragma once

#include "orthoshell/bvp.hpp"

namespace orthoshell {

/// Thickness correction delta(eps) = (1 - nu12 nu21) / (L(eps/rho_o) - nu12 nu21);
/// tends to 1 in the large-thinness limit.
double kl_delta(const ShellGeometry& g, const KLMaterial& m);

/// Kirchhoff-Love boundary-value problems: the radial machinery of the full
/// theory with the thickness stretch pinned to zero and no integral relation.
AxisymSolution kl_solve_traction(const ShellGeometry& g, const KLMaterial& m, double p);
AxisymSolution kl_solve_pressure(const ShellGeometry& g, const KLMaterial& m, double varpi);
AxisymSolution kl_solve_rim_flexure(const ShellGeometry& g, const KLMaterial& m, double mo);

struct KLEffective {
    double nu_CA = 0;
    double nu_CP = 0;
    double s_A = 0;
    double s_T = 0;
};

KLEffective kl_effective(const ShellGeometry& g, const KLMaterial& m);

/// Midspan measurements of a traction and a pressure virtual experiment on a
/// thin slender Kirchhoff-Love shell.
struct KLExperimentRecord {
    double w_T = 0;          ///< interior radial deflection under traction
    double a1_slope_T = 0;   ///< axial strain under traction
    double w_P = 0;          ///< interior radial deflection under pressure
    double a1_slope_P = 0;   ///< axial strain under pressure
    double p = 0;
    double varpi = 0;
    double rho_o = 0;
};

/// Thickness-premultiplied moduli identified from the record
/// (E_eff = E * eps sidesteps the wall-thickness ambiguity).
struct KLIdentifiedModuli {
    double E1_eff = 0;
    double E2_eff = 0;
    double nu12 = 0;
    double nu21 = 0;
};

KLIdentifiedModuli kl_identify_moduli(const KLExperimentRecord& rec);

/// Residual of the reciprocity check p/w_T = varpi/a1'_P, normalized by the
/// larger of the two ratios.
double kl_consistency_check(const KLExperimentRecord& rec);

/// Generates the record by solving the two KL problems and reading the
/// midspan response.
KLExperimentRecord kl_virtual_experiment(const ShellGeometry& g, const KLMaterial& m,
                                         double p, double varpi);

}  // namespace orthoshell
