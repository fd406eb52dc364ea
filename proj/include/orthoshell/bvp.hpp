#pragma once

#include <complex>
#include <vector>

#include "orthoshell/shell.hpp"

namespace orthoshell {

/// One of the four axisymmetric Neumann problems and its load magnitude:
/// torque line density t (T = 2 pi rho_o^2 t), axial line load p
/// (P = 2 pi rho_o p), outward radial pressure varpi, or rim couple m.
struct LoadCase {
    enum class Kind { Torsion, Traction, Pressure, RimFlexure };
    Kind kind = Kind::Traction;
    double magnitude = 0.0;
};

/// Dimensionless combinations entering the radial ODE
///   eps^2 rho^2 (1 - eps^2/(3 rho^2)) w'''' + eps^2 a w'' + b w + ... = 0
/// and the thickness-stretch equation written in the form
///   (a1*d/b + a2) gamma = load + (2/(l rho)) sum_i c_i/alpha_i
///                          (a1 + eps^2 a0 alpha_i^2) sinh(alpha_i l).
/// a0, a1, a2 are undefined (NaN) when the 13-coupling vanishes (including
/// the Kirchhoff-Love theory, which has no thickness-stretch equation).
struct BvpConstants {
    double a = 0, b = 0, c = 0, c_tilde = 0, d = 0;
    double a0 = 0, a1 = 0, a2 = 0;
};

BvpConstants bvp_constants(const ShellGeometry& g, const StressLaw& law);
BvpConstants bvp_constants(const ShellGeometry& g, const OrthotropicMaterial& m);
BvpConstants bvp_constants(const ShellGeometry& g, const KLMaterial& m);

/// Principal characteristic roots (Re >= 0) of the radial operator. Throws
/// DegenerateRoots when the two roots coincide.
std::pair<std::complex<double>, std::complex<double>> characteristic_roots(
    const BvpConstants& k, const ShellGeometry& g);

/// Complex modal representation of the radial deflection
///   w(x1) = w_p + c1 (e^{a1 x1} + e^{-a1 x1}) + c2 (e^{a2 x1} + e^{-a2 x1}).
/// Evaluation goes through the rim-referenced amplitudes A_i = c_i e^{a_i l},
/// so no intermediate exceeds exp(Re a_i (|x1| - l)) <= 1.
struct RadialSolution {
    std::complex<double> alpha1, alpha2;
    std::complex<double> c1, c2;
    std::complex<double> A1, A2;  ///< rim amplitudes c_i * exp(alpha_i l)
    double w_p = 0.0;
    double gamma = 0.0;
    double l = 0.0;
    LoadCase::Kind provenance = LoadCase::Kind::Traction;

    std::complex<double> w_complex(double x1, int der = 0) const;
    double w(double x1, int der = 0) const;
    /// boundary-layer part w - w_p, computed without cancellation
    double layer(double x1, int der = 0) const;
};

/// Closed-form solution of one radial problem: the modal radial deflection
/// plus the axial displacement a1 (odd, a1(0) = 0).
struct AxisymSolution {
    ShellGeometry geom;
    StressLaw law;
    LoadCase load;
    RadialSolution radial;
    double a1_slope = 0.0;
    std::complex<double> a1_amp1, a1_amp2;  ///< rim amplitudes of the modal a1'

    double w(double x1, int der = 0) const { return radial.w(x1, der); }
    double a1(double x1, int der = 0) const;
    /// View as an admissible state (a2 = 0) for resultants and export.
    AxisymmetricState state() const;
};

/// Torsion: a2 = a2_slope * x1 with a2_slope = t / r_T; exact in both
/// theories.
struct TorsionSolution {
    double a2_slope = 0.0;
    double Theta = 0.0;  ///< rotation per unit length
    double r_T = 0.0;    ///< torsional resultant modulus 2 eps (1 + eps^2/rho^2) G
    double t = 0.0;
    AxisymmetricState state() const;
};

TorsionSolution solve_torsion(const ShellGeometry& g, const OrthotropicMaterial& m, double t);
TorsionSolution solve_torsion(const ShellGeometry& g, const KLMaterial& m, double t);
TorsionSolution torsion_from_law(const ShellGeometry& g, const StressLaw& law, double t);

AxisymSolution solve_traction(const ShellGeometry& g, const OrthotropicMaterial& m, double p);
AxisymSolution solve_pressure(const ShellGeometry& g, const OrthotropicMaterial& m, double varpi);
AxisymSolution solve_rim_flexure(const ShellGeometry& g, const OrthotropicMaterial& m, double mo);

/// Shared radial machinery; the Kirchhoff-Love theory passes a KL StressLaw
/// (gamma pinned to zero, no integral relation).
AxisymSolution solve_radial_problem(const ShellGeometry& g, const StressLaw& law,
                                    LoadCase::Kind kind, double magnitude);

/// Reactive transverse shear F<31>(x1) = M<11>'(x1).
double reactive_shear(const AxisymSolution& sol, double x1);

/// Boundary-layer coefficients (c1, c2, A1, A2) from the rim system
///   sum_i c_i alpha_i B_i sinh(alpha_i l) = 0,
///   2 sum_i c_i B_i cosh(alpha_i l) = r.
struct ModeCoefficients {
    std::complex<double> c1, c2;
    std::complex<double> A1, A2;
};

/// Overflow-safe evaluation: dominant exponentials factored out, ratios
/// expressed through q_i = exp(-2 alpha_i l).
ModeCoefficients boundary_coefficients_stable(std::complex<double> alpha1,
                                              std::complex<double> alpha2,
                                              std::complex<double> B1,
                                              std::complex<double> B2, double r,
                                              double l);

/// Literal exp(2 alpha l) ratio form; overflows for large Re(alpha) l.
/// Algebraically identical to the stable evaluation.
ModeCoefficients boundary_coefficients_naive(std::complex<double> alpha1,
                                             std::complex<double> alpha2,
                                             std::complex<double> B1,
                                             std::complex<double> B2, double r,
                                             double l);

/// Normalized self-check residuals of a solved problem.
struct ResidualReport {
    double field_eq = 0;       ///< third balance equation over >= 101 stations
    double statics_f11 = 0;    ///< F11 - p (traction) or F11 (other cases)
    double bc_m11_minus = 0;   ///< M11(-l) vs prescribed
    double bc_m11_plus = 0;
    double bc_m11p_minus = 0;  ///< M11'(-l) vs 0
    double bc_m11p_plus = 0;
    double integral = 0;       ///< thickness-stretch integral relation
    double gamma_eq = 0;       ///< gamma equation in its a-constants form

    double max() const;
};

ResidualReport residuals(const AxisymSolution& sol, int stations = 101);
ResidualReport residuals(const TorsionSolution& sol, const ShellGeometry& g,
                         const StressLaw& law);
ResidualReport residuals(const TorsionSolution& sol, const ShellGeometry& g,
                         const OrthotropicMaterial& m);

}  // namespace orthoshell
