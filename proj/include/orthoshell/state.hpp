#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>
#include <vector>

#include "orthoshell/errors.hpp"

namespace orthoshell {

/// Scalar function of the axial coordinate carrying derivatives up to 4th
/// order. Value-semantic wrapper; closed-form solutions supply analytic
/// derivatives, sampled data is differentiated through local quintic
/// interpolation.
class Profile {
  public:
    using Fn = std::function<double(double x, int der)>;

    Profile() : fn_([](double, int) { return 0.0; }) {}
    explicit Profile(Fn fn) : fn_(std::move(fn)) {}

    double operator()(double x, int der = 0) const { return fn_(x, der); }

    static Profile zero() { return Profile(); }
    static Profile constant(double c) {
        return Profile([c](double, int der) { return der == 0 ? c : 0.0; });
    }
    static Profile linear(double slope) {
        return Profile([slope](double x, int der) {
            if (der == 0) return slope * x;
            if (der == 1) return slope;
            return 0.0;
        });
    }
    /// coeffs[k] multiplies x^k.
    static Profile polynomial(std::vector<double> coeffs);
    /// Uniform samples y_j at x0 + j*h, differentiated by sliding-window
    /// quintic interpolation (six-point stencils).
    static Profile sampled(double x0, double h, Eigen::VectorXd values);

  private:
    Fn fn_;
};

/// Admissible axisymmetric displacement parameters: axial and circumferential
/// midsurface displacements, radial deflection, and the uniform thickness
/// stretch gamma.
struct AxisymmetricState {
    Profile a1;
    Profile a2;
    Profile w;
    double gamma = 0.0;
};

}  // namespace orthoshell
