#pragma once

#include <Eigen/Core>

#include "orthoshell/bvp.hpp"

namespace orthoshell {

/// Finite-difference solution on a uniform grid over [-l, +l]. Independent of
/// the closed-form coefficient formulas: every ODE coefficient is extracted
/// numerically from the thickness-quadrature resultants.
struct GridSolution {
    Eigen::VectorXd x;
    Eigen::VectorXd w;
    Eigen::VectorXd a1;
    Eigen::VectorXd a2;
    double gamma = 0.0;
    int n = 0;

    AxisymmetricState state() const;
};

/// Second-order central-difference solve of one axisymmetric problem with two
/// ghost points per rim; the integral constraint is a trapezoid row and gamma
/// one extra unknown (dropped in the Kirchhoff-Love theory). n odd, >= 201.
GridSolution fd_solve(const ShellGeometry& g, const StressLaw& law,
                      const LoadCase& load, int n);
GridSolution fd_solve(const ShellGeometry& g, const OrthotropicMaterial& m,
                      const LoadCase& load, int n);
GridSolution fd_solve(const ShellGeometry& g, const KLMaterial& m,
                      const LoadCase& load, int n);

struct ConvergenceReport {
    double order = 0.0;   ///< observed order from three nested grids
    bool exact = false;   ///< successive differences at rounding level
    double diff_coarse = 0.0;
    double diff_fine = 0.0;
};

/// Runs n0, 2n0-1, 4n0-3 and reports log2 of the successive L-infinity
/// difference ratios of w (a2 for torsion).
ConvergenceReport convergence_order(const ShellGeometry& g, const StressLaw& law,
                                    const LoadCase& load, int n0);
ConvergenceReport convergence_order(const ShellGeometry& g, const OrthotropicMaterial& m,
                                    const LoadCase& load, int n0);

/// Grid-converged oracle field: solves at n and (n+1)/2 and Richardson-
/// extrapolates on the common (coarse) nodes; valid once the observed order
/// matches the scheme order.
GridSolution fd_solve_converged(const ShellGeometry& g, const StressLaw& law,
                                const LoadCase& load, int n);
GridSolution fd_solve_converged(const ShellGeometry& g, const OrthotropicMaterial& m,
                                const LoadCase& load, int n);
GridSolution fd_solve_converged(const ShellGeometry& g, const KLMaterial& m,
                                const LoadCase& load, int n);

}  // namespace orthoshell
