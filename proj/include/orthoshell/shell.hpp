#pragma once

#include <Eigen/Core>
#include <array>

#include "orthoshell/geometry.hpp"
#include "orthoshell/material.hpp"
#include "orthoshell/state.hpp"

namespace orthoshell {

/// Coefficients of the active stress law on the constraint space,
///   S11 = q11 E11 + q12 E22 + q13 E33, etc., S12 = 2 G E12.
/// The Kirchhoff-Love variant zeroes the thickness couplings; F33 is then
/// reactive and its active part vanishes.
struct StressLaw {
    double q11 = 0, q22 = 0, q33 = 0;
    double q12 = 0, q13 = 0, q23 = 0;
    double G = 0;
    double E1 = 0;
    double Delta = 1;
    double one_minus = 1;  ///< 1 - nu23*nu32 (1 in the KL theory)
    bool kl = false;

    static StressLaw from(const OrthotropicMaterial& m);
    static StressLaw from(const KLMaterial& m);
};

/// The eight axisymmetric force/moment measures at a station x1.
struct ResultantSet {
    double F11 = 0, F22 = 0, F21 = 0, F33 = 0;
    double M11 = 0, M21 = 0, M12 = 0, M22 = 0;
    double x1 = 0;

    std::array<double, 8> as_array() const {
        return {F11, F22, F21, F33, M11, M21, M12, M22};
    }
};

/// Physical displacement components (u<1>, u<2>, u<3>) at (x1, zeta).
Eigen::Vector3d displacement(const ShellGeometry& g, const AxisymmetricState& s,
                             double x1, double zeta);

/// Physical strain components at (x1, zeta).
StrainComponents strain(const ShellGeometry& g, const AxisymmetricState& s,
                        double x1, double zeta);

/// Closed-form resultants (exact thickness integrals of the stress law).
ResultantSet resultants(const ShellGeometry& g, const StressLaw& q,
                        const AxisymmetricState& s, double x1);
ResultantSet resultants(const ShellGeometry& g, const OrthotropicMaterial& m,
                        const AxisymmetricState& s, double x1);
ResultantSet resultants(const ShellGeometry& g, const KLMaterial& m,
                        const AxisymmetricState& s, double x1);

/// Independent oracle: Gauss-Legendre thickness quadrature of the pointwise
/// stress with the exact zeta-weights. n is the quadrature order (>= 8).
ResultantSet resultants_by_quadrature(const ShellGeometry& g, const StressLaw& q,
                                      const AxisymmetricState& s, double x1, int n);
ResultantSet resultants_by_quadrature(const ShellGeometry& g, const OrthotropicMaterial& m,
                                      const AxisymmetricState& s, double x1, int n);

/// Axial derivative of the bending moment M11; by balance this is the
/// reactive transverse shear F<31>.
double m11_prime(const ShellGeometry& g, const StressLaw& q,
                 const AxisymmetricState& s, double x1);

/// Thickness-averaged cross-section strain measure (exact weighted average;
/// reduces to (a1', a2'/2, w/rho_o, gamma) wherever w'' and the twist
/// corrections vanish, as in the slender interior).
struct CrossSectionStrain {
    double E11 = 0, E12 = 0, E22 = 0, E33 = 0;
};

CrossSectionStrain cross_section_strain(const ShellGeometry& g,
                                        const AxisymmetricState& s, double x1);

/// Gauss-Legendre nodes and weights on (-1, 1).
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

}  // namespace orthoshell
