#include "orthoshell/shell.hpp"

#include <cmath>

namespace orthoshell {

StressLaw StressLaw::from(const OrthotropicMaterial& m) {
    const double d = delta(m);
    if (!(d > 0)) throw NonPositiveDelta("StressLaw: Delta <= 0");
    StressLaw q;
    q.q11 = m.E1 * (1.0 - m.nu23 * m.nu32) / d;
    q.q22 = m.E2 * (1.0 - m.nu13 * m.nu31) / d;
    q.q33 = m.E3 * (1.0 - m.nu12 * m.nu21) / d;
    q.q12 = m.E1 * (m.nu21 + m.nu23 * m.nu31) / d;
    q.q13 = m.E1 * (m.nu31 + m.nu21 * m.nu32) / d;
    q.q23 = m.E2 * (m.nu32 + m.nu31 * m.nu12) / d;
    q.G = m.G;
    q.E1 = m.E1;
    q.Delta = d;
    q.one_minus = 1.0 - m.nu23 * m.nu32;
    q.kl = false;
    return q;
}

StressLaw StressLaw::from(const KLMaterial& m) {
    const double d = 1.0 - m.nu12 * m.nu21;
    if (!(d > 0)) throw NonPositiveDelta("StressLaw: 1 - nu12*nu21 <= 0");
    StressLaw q;
    q.q11 = m.E1 / d;
    q.q22 = m.E2 / d;
    q.q12 = m.E1 * m.nu21 / d;
    q.q33 = q.q13 = q.q23 = 0.0;
    q.G = m.G;
    q.E1 = m.E1;
    q.Delta = d;
    q.one_minus = 1.0;
    q.kl = true;
    return q;
}

namespace {

void require_inside(const ShellGeometry& g, double x1, double zeta) {
    const double slack = 1e-12;
    if (std::abs(zeta) > g.eps * (1.0 + slack) ||
        std::abs(x1) > g.l * (1.0 + slack))
        throw OutOfDomain("station (x1, zeta) outside the shell body");
}

}  // namespace

Eigen::Vector3d displacement(const ShellGeometry& g, const AxisymmetricState& s,
                             double x1, double zeta) {
    require_inside(g, x1, zeta);
    Eigen::Vector3d u;
    u[0] = s.a1(x1) - zeta * s.w(x1, 1);
    u[1] = (1.0 + zeta / g.rho_o) * s.a2(x1);
    u[2] = s.w(x1) + zeta * s.gamma;
    return u;
}

StrainComponents strain(const ShellGeometry& g, const AxisymmetricState& s,
                        double x1, double zeta) {
    require_inside(g, x1, zeta);
    const double al = 1.0 + zeta / g.rho_o;
    StrainComponents e;
    e.e11 = s.a1(x1, 1) - zeta * s.w(x1, 2);
    e.e12 = 0.5 * al * s.a2(x1, 1);
    e.e22 = (s.w(x1) + zeta * s.gamma) / (g.rho_o * al);
    e.e33 = s.gamma;
    return e;
}

ResultantSet resultants(const ShellGeometry& g, const StressLaw& q,
                        const AxisymmetricState& s, double x1) {
    const double rho = g.rho_o, eps = g.eps;
    const double x = eps / rho;
    const double L = log_factor(x);
    const double a1p = s.a1(x1, 1), a2p = s.a2(x1, 1);
    const double w = s.w(x1), wpp = s.w(x1, 2);
    const double gam = q.kl ? 0.0 : s.gamma;
    const double e3 = eps * eps * eps;

    ResultantSet r;
    r.x1 = x1;
    const double memA = rho * a1p - eps * eps / 3.0 * wpp;
    r.F11 = 2.0 * (eps / rho) * (q.q11 * memA + q.q12 * w + q.q13 * rho * gam);
    r.F22 = 2.0 * (eps / rho) *
            (q.q12 * rho * a1p + q.q22 * (L * w + (1.0 - L) * rho * gam) + q.q23 * rho * gam);
    r.F21 = 2.0 * eps * q.G * (1.0 + x * x / 3.0) * a2p;
    r.F33 = q.kl ? 0.0
                 : 2.0 * (eps / rho) * (q.q13 * memA + q.q23 * w + q.q33 * rho * gam);
    r.M11 = (2.0 * e3 / (3.0 * rho)) *
            (q.q11 * (a1p - rho * wpp) + (q.q12 + q.q13) * gam);
    r.M21 = (4.0 * e3 / (3.0 * rho)) * q.G * a2p;
    r.M12 = (2.0 * e3 / (3.0 * rho)) * q.G * a2p;
    r.M22 = 2.0 * eps *
            (q.q22 * (1.0 - L) * (w - rho * gam) - eps * eps / 3.0 * q.q12 * wpp);
    return r;
}

ResultantSet resultants(const ShellGeometry& g, const OrthotropicMaterial& m,
                        const AxisymmetricState& s, double x1) {
    return resultants(g, StressLaw::from(m), s, x1);
}

ResultantSet resultants(const ShellGeometry& g, const KLMaterial& m,
                        const AxisymmetricState& s, double x1) {
    return resultants(g, StressLaw::from(m), s, x1);
}

double m11_prime(const ShellGeometry& g, const StressLaw& q,
                 const AxisymmetricState& s, double x1) {
    const double e3 = g.eps * g.eps * g.eps;
    return (2.0 * e3 / (3.0 * g.rho_o)) * q.q11 * (s.a1(x1, 2) - g.rho_o * s.w(x1, 3));
}

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    if (n < 1) throw DomainError("gauss_legendre: order must be positive");
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / pp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        nodes[i] = t;
        weights[i] = 2.0 / ((1.0 - t * t) * pp * pp);
    }
}

ResultantSet resultants_by_quadrature(const ShellGeometry& g, const StressLaw& q,
                                      const AxisymmetricState& s, double x1, int n) {
    if (n < 8) throw DomainError("resultants_by_quadrature: order must be >= 8");
    Eigen::VectorXd t, wq;
    gauss_legendre(n, t, wq);
    const double rho = g.rho_o, eps = g.eps;
    const double a1p = s.a1(x1, 1), a2p = s.a2(x1, 1);
    const double w = s.w(x1), wpp = s.w(x1, 2);
    const double gam = q.kl ? 0.0 : s.gamma;
    ResultantSet r;
    r.x1 = x1;
    for (int i = 0; i < n; ++i) {
        const double z = eps * t[i];
        const double dz = eps * wq[i];
        const double al = 1.0 + z / rho;
        const double e11 = a1p - z * wpp;
        const double e12 = 0.5 * al * a2p;
        const double e22 = (w + z * gam) / (rho * al);
        const double s11 = q.q11 * e11 + q.q12 * e22 + q.q13 * gam;
        const double s22 = q.q12 * e11 + q.q22 * e22 + q.q23 * gam;
        const double s33 = q.q13 * e11 + q.q23 * e22 + q.q33 * gam;
        const double s12 = 2.0 * q.G * e12;
        r.F11 += dz * al * s11;
        r.F22 += dz * s22;
        r.F21 += dz * al * s12;
        r.F33 += dz * al * s33;
        r.M11 += dz * al * z * s11;
        r.M21 += dz * al * z * s12;
        r.M12 += dz * z * s12;
        r.M22 += dz * z * s22;
    }
    if (q.kl) r.F33 = 0.0;
    return r;
}

ResultantSet resultants_by_quadrature(const ShellGeometry& g, const OrthotropicMaterial& m,
                                      const AxisymmetricState& s, double x1, int n) {
    return resultants_by_quadrature(g, StressLaw::from(m), s, x1, n);
}

CrossSectionStrain cross_section_strain(const ShellGeometry& g,
                                        const AxisymmetricState& s, double x1) {
    const double rho = g.rho_o, eps = g.eps;
    const double x = eps / rho;
    CrossSectionStrain e;
    e.E11 = s.a1(x1, 1) - eps * eps / (3.0 * rho) * s.w(x1, 2);
    e.E12 = 0.5 * (1.0 + x * x / 3.0) * s.a2(x1, 1);
    e.E22 = s.w(x1) / rho;
    e.E33 = s.gamma;
    return e;
}

}  // namespace orthoshell
