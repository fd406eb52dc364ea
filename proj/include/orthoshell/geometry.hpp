#pragma once

#include <cmath>
#include <string>

#include "orthoshell/errors.hpp"

namespace orthoshell {

/// Right circular cylindrical midsurface of radius rho_o, half-thickness eps
/// and half-length l. The body occupies |zeta| <= eps, |x1| <= l.
struct ShellGeometry {
    double rho_o = 1.0;  ///< midsurface radius
    double eps = 0.0;    ///< half-thickness
    double l = 1.0;      ///< half-length

    double thinness() const { return eps / rho_o; }
    double slenderness() const { return rho_o / l; }

    void require_valid() const {
        if (!(rho_o > 0.0) || !(eps > 0.0) || !(l > 0.0))
            throw DomainError("ShellGeometry: rho_o, eps, l must be positive");
        if (!(eps < rho_o))
            throw DomainError("ShellGeometry: half-thickness must satisfy eps < rho_o");
    }
};

/// The recurring thickness-log construct (1/(2x)) * log((1+x)/(1-x)),
/// continuous at x = 0 with value 1. Below x = 1e-4 the Taylor series
/// 1 + x^2/3 + x^4/5 + x^6/7 is used to avoid cancellation.
inline double log_factor(double x) {
    if (!(x >= 0.0) || x >= 1.0)
        throw DomainError("log_factor: argument must lie in [0, 1), got " + std::to_string(x));
    const double x2 = x * x;
    if (x < 1e-4)
        return 1.0 + x2 * (1.0 / 3.0 + x2 * (1.0 / 5.0 + x2 * (1.0 / 7.0)));
    return (std::log1p(x) - std::log1p(-x)) / (2.0 * x);
}

}  // namespace orthoshell
