#include "orthoshell/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orthoshell {

namespace {

using cplx = std::complex<double>;

double coupling13(const StressLaw& q) { return q.q13 / q.q11; }

struct SlenderCoeffs {
    // coefficients of the pointwise integral relation, shared with the
    // effective-property formulas
    double W1c, G1c, L1c;
};

SlenderCoeffs integral_coeffs(const ShellGeometry& g, const StressLaw& q) {
    const double L = log_factor(g.thinness());
    const double n1 = q.q12 / q.q11, n2 = q.q13 / q.q11;
    return {q.q22 * (1.0 - L) - q.q13 * n1 + q.q23,
            q.q33 - q.q22 * (1.0 - L) - q.q13 * n2,
            q.q13 / q.one_minus};
}

}  // namespace

BvpConstants bvp_constants(const ShellGeometry& g, const StressLaw& q) {
    g.require_valid();
    const double L = log_factor(g.thinness());
    const double n1 = q.q12 / q.q11, n2 = q.q13 / q.q11;
    BvpConstants k;
    k.a = 2.0 * n1;
    k.b = 3.0 * ((q.q22 / q.q11) * L - n1 * n1);
    k.c = 3.0 * n1 / q.one_minus;
    k.c_tilde = 3.0 / q.one_minus;
    k.d = 3.0 * ((q.q22 / q.q11) * (1.0 - L) + q.q23 / q.q11 - n1 * n2);
    if (!q.kl && std::abs(q.q13) > 0.0) {
        const auto ic = integral_coeffs(g, q);
        const double kap = q.one_minus / q.q13;
        k.a0 = kap * q.q12 / 3.0;
        k.a1 = -kap * ic.W1c;
        k.a2 = kap * ic.G1c;
    } else {
        k.a0 = k.a1 = k.a2 = std::numeric_limits<double>::quiet_NaN();
    }
    return k;
}

BvpConstants bvp_constants(const ShellGeometry& g, const OrthotropicMaterial& m) {
    return bvp_constants(g, StressLaw::from(m));
}

BvpConstants bvp_constants(const ShellGeometry& g, const KLMaterial& m) {
    return bvp_constants(g, StressLaw::from(m));
}

std::pair<cplx, cplx> characteristic_roots(const BvpConstants& k, const ShellGeometry& g) {
    const double rho = g.rho_o, eps = g.eps;
    const double A = 1.0 - (eps * eps) / (3.0 * rho * rho);
    const cplx disc = cplx(k.a * k.a - 4.0 * k.b * (rho * rho) / (eps * eps) * A, 0.0);
    const cplx sq = std::sqrt(disc);
    const cplx a1sq = (-k.a + sq) / (2.0 * rho * rho * A);
    const cplx a2sq = (-k.a - sq) / (2.0 * rho * rho * A);
    cplx alpha1 = std::sqrt(a1sq);
    cplx alpha2 = std::sqrt(a2sq);
    if (alpha1.real() < 0.0) alpha1 = -alpha1;
    if (alpha2.real() < 0.0) alpha2 = -alpha2;
    if (disc.real() < 0.0) alpha2 = std::conj(alpha1);  // exact conjugate pair
    if (std::abs(alpha1 - alpha2) < 1e-12 * std::abs(alpha1))
        throw DegenerateRoots("characteristic_roots: repeated roots, two-mode ansatz fails");
    return {alpha1, alpha2};
}

ModeCoefficients boundary_coefficients_stable(cplx alpha1, cplx alpha2, cplx B1,
                                              cplx B2, double r, double l) {
    const cplx q1 = std::exp(-2.0 * alpha1 * l);
    const cplx q2 = std::exp(-2.0 * alpha2 * l);
    const cplx Dq = alpha1 * (1.0 - q1) * (1.0 + q2) - alpha2 * (1.0 - q2) * (1.0 + q1);
    ModeCoefficients mc;
    mc.A1 = -r * alpha2 * (1.0 - q2) / (B1 * Dq);
    mc.A2 = r * alpha1 * (1.0 - q1) / (B2 * Dq);
    mc.c1 = mc.A1 * std::exp(-alpha1 * l);
    mc.c2 = mc.A2 * std::exp(-alpha2 * l);
    return mc;
}

ModeCoefficients boundary_coefficients_naive(cplx alpha1, cplx alpha2, cplx B1,
                                             cplx B2, double r, double l) {
    const cplx e1 = std::exp(2.0 * alpha1 * l);
    const cplx e2 = std::exp(2.0 * alpha2 * l);
    const cplx den = alpha1 * (e1 - 1.0) * (e2 + 1.0) - alpha2 * (e2 - 1.0) * (e1 + 1.0);
    ModeCoefficients mc;
    mc.c1 = -r * alpha2 * (e2 - 1.0) * std::exp(alpha1 * l) / (B1 * den);
    mc.c2 = r * alpha1 * (e1 - 1.0) * std::exp(alpha2 * l) / (B2 * den);
    mc.A1 = mc.c1 * std::exp(alpha1 * l);
    mc.A2 = mc.c2 * std::exp(alpha2 * l);
    return mc;
}

std::complex<double> RadialSolution::w_complex(double x1, int der) const {
    cplx tot = 0.0;
    const cplx as[2] = {alpha1, alpha2};
    const cplx As[2] = {A1, A2};
    const double sign = (der % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < 2; ++i) {
        cplx ak = 1.0;
        for (int j = 0; j < der; ++j) ak *= as[i];
        tot += As[i] * ak *
               (std::exp(as[i] * (x1 - l)) + sign * std::exp(-as[i] * (x1 + l)));
    }
    if (der == 0) tot += w_p;
    return tot;
}

double RadialSolution::w(double x1, int der) const { return w_complex(x1, der).real(); }

double RadialSolution::layer(double x1, int der) const {
    cplx tot = w_complex(x1, der);
    if (der == 0) tot -= w_p;
    return tot.real();
}

double AxisymSolution::a1(double x1, int der) const {
    cplx tot = 0.0;
    const cplx as[2] = {radial.alpha1, radial.alpha2};
    const cplx Bs[2] = {a1_amp1, a1_amp2};
    const double sign = (der % 2 == 0) ? -1.0 : 1.0;
    for (int i = 0; i < 2; ++i) {
        cplx ak = 1.0;
        for (int j = 0; j < der - 1; ++j) ak *= as[i];
        if (der == 0) ak = 1.0 / as[i];
        tot += Bs[i] * ak *
               (std::exp(as[i] * (x1 - radial.l)) + sign * std::exp(-as[i] * (x1 + radial.l)));
    }
    double lin = 0.0;
    if (der == 0) lin = a1_slope * x1;
    if (der == 1) lin = a1_slope;
    return tot.real() + lin;
}

AxisymmetricState AxisymSolution::state() const {
    AxisymmetricState s;
    s.a1 = Profile([sol = *this](double x, int der) { return sol.a1(x, der); });
    s.w = Profile([r = radial](double x, int der) { return r.w(x, der); });
    s.a2 = Profile::zero();
    s.gamma = radial.gamma;
    return s;
}

AxisymmetricState TorsionSolution::state() const {
    AxisymmetricState s;
    s.a2 = Profile::linear(a2_slope);
    return s;
}

namespace {

// Modal data of the radial problem at a prescribed thickness stretch.
struct RadialBuild {
    RadialSolution radial;
    double a1_slope;
    cplx a1_amp1, a1_amp2;
    double CR;  // load term of the membrane relation, rho a1' - eps^2/3 w'' + ... = CR + ...
};

RadialBuild build_radial(const ShellGeometry& g, const StressLaw& q,
                         LoadCase::Kind kind, double mag, double gamma,
                         const BvpConstants& k,
                         const std::pair<cplx, cplx>& roots) {
    const double rho = g.rho_o, eps = g.eps, l = g.l;
    const double x = g.thinness();
    const double n1 = q.q12 / q.q11, n2 = q.q13 / q.q11;
    const double Pm = q.Delta * mag / (2.0 * q.E1 * eps);

    double w_p = 0.0, RHS4 = 0.0, CR = 0.0;
    switch (kind) {
        case LoadCase::Kind::Traction:
            CR = rho * Pm / q.one_minus;
            w_p = -rho * (k.c / k.b * Pm + k.d / k.b * gamma);
            RHS4 = Pm / q.one_minus;
            break;
        case LoadCase::Kind::Pressure:
            w_p = rho * (k.c_tilde / k.b * rho * Pm - k.d / k.b * gamma);
            RHS4 = 0.0;
            break;
        case LoadCase::Kind::RimFlexure:
            w_p = -k.d / k.b * rho * gamma;
            RHS4 = -1.5 * (q.Delta / q.one_minus) * mag * rho / (eps * eps * eps * q.E1);
            break;
        case LoadCase::Kind::Torsion:
            throw DomainError("build_radial: torsion has no radial problem");
    }

    const double A = 1.0 - x * x / 3.0;
    const cplx alpha1 = roots.first, alpha2 = roots.second;
    const cplx B1 = rho * A * alpha1 * alpha1 + n1 / rho;
    const cplx B2 = rho * A * alpha2 * alpha2 + n1 / rho;
    const double r = RHS4 - (n1 / rho) * w_p + n1 * gamma;
    ModeCoefficients mc = boundary_coefficients_stable(alpha1, alpha2, B1, B2, r, l);
    if (alpha1.imag() != 0.0 && alpha2 == std::conj(alpha1)) {
        // conjugate pair: enforce exact conjugacy so evaluated fields are real
        mc.c2 = std::conj(mc.c1);
        mc.A2 = std::conj(mc.A1);
    }

    RadialBuild rb;
    rb.radial.alpha1 = alpha1;
    rb.radial.alpha2 = alpha2;
    rb.radial.c1 = mc.c1;
    rb.radial.c2 = mc.c2;
    rb.radial.A1 = mc.A1;
    rb.radial.A2 = mc.A2;
    rb.radial.w_p = w_p;
    rb.radial.gamma = gamma;
    rb.radial.l = l;
    rb.radial.provenance = kind;
    rb.CR = CR;
    rb.a1_slope = (CR - n1 * w_p - n2 * rho * gamma) / rho;
    rb.a1_amp1 = mc.A1 * (eps * eps / 3.0 * alpha1 * alpha1 - n1) / rho;
    rb.a1_amp2 = mc.A2 * (eps * eps / 3.0 * alpha2 * alpha2 - n1) / rho;
    return rb;
}

// Exact integral of M22/rho + F33 over (-l, l) for the modal trial solution;
// the thickness-stretch equation is defect(gamma) = 0.
double integral_defect(const ShellGeometry& g, const StressLaw& q,
                       const RadialBuild& rb) {
    const double rho = g.rho_o, eps = g.eps, l = g.l;
    const double L = log_factor(g.thinness());
    const double gamma = rb.radial.gamma;
    const cplx as[2] = {rb.radial.alpha1, rb.radial.alpha2};
    const cplx As[2] = {rb.radial.A1, rb.radial.A2};
    const cplx Bs[2] = {rb.a1_amp1, rb.a1_amp2};
    cplx intw = 2.0 * l * rb.radial.w_p;
    cplx wpl = 0.0;
    cplx a1l = rb.a1_slope * l;
    for (int i = 0; i < 2; ++i) {
        const cplx q1 = std::exp(-2.0 * as[i] * l);
        intw += 2.0 * As[i] / as[i] * (1.0 - q1);
        wpl += As[i] * as[i] * (1.0 - q1);
        a1l += Bs[i] / as[i] * (1.0 - q1);
    }
    const cplx intM22 = 2.0 * eps * (q.q22 * (1.0 - L) * (intw - 2.0 * l * rho * gamma) -
                                     eps * eps / 3.0 * q.q12 * (2.0 * wpl));
    const cplx intF33 =
        2.0 * (eps / rho) * (q.q13 * (rho * 2.0 * a1l - eps * eps / 3.0 * (2.0 * wpl)) +
                             q.q23 * intw + q.q33 * rho * 2.0 * l * gamma);
    return (intM22 / rho + intF33).real();
}

AxisymSolution finish(const ShellGeometry& g, const StressLaw& q, LoadCase::Kind kind,
                      double mag, const RadialBuild& rb) {
    AxisymSolution sol;
    sol.geom = g;
    sol.law = q;
    sol.load = {kind, mag};
    sol.radial = rb.radial;
    sol.a1_slope = rb.a1_slope;
    sol.a1_amp1 = rb.a1_amp1;
    sol.a1_amp2 = rb.a1_amp2;
    return sol;
}

}  // namespace

AxisymSolution solve_radial_problem(const ShellGeometry& g, const StressLaw& q,
                                    LoadCase::Kind kind, double mag) {
    g.require_valid();
    const BvpConstants k = bvp_constants(g, q);
    if (!(std::abs(k.b) > 0.0))
        throw DegenerateRoots("solve_radial_problem: b = 0, problem not solvable");
    const auto roots = characteristic_roots(k, g);
    if (q.kl)
        return finish(g, q, kind, mag, build_radial(g, q, kind, mag, 0.0, k, roots));

    // gamma: probe the affine defect at 0, 1; verify affinity at 1/2
    const double g0 = integral_defect(g, q, build_radial(g, q, kind, mag, 0.0, k, roots));
    const double g1 = integral_defect(g, q, build_radial(g, q, kind, mag, 1.0, k, roots));
    const double gm = integral_defect(g, q, build_radial(g, q, kind, mag, 0.5, k, roots));
    const double scale = std::max({std::abs(g0), std::abs(g1), 1e-300});
    if (std::abs(gm - 0.5 * (g0 + g1)) > 1e-10 * scale)
        throw SingularGamma("solve_radial_problem: gamma defect not affine");
    if (std::abs(g0 - g1) < 1e-12 * scale)
        throw SingularGamma("solve_radial_problem: vanishing gamma-equation coefficient");
    const double gamma = g0 / (g0 - g1);
    return finish(g, q, kind, mag, build_radial(g, q, kind, mag, gamma, k, roots));
}

AxisymSolution solve_traction(const ShellGeometry& g, const OrthotropicMaterial& m, double p) {
    return solve_radial_problem(g, StressLaw::from(m), LoadCase::Kind::Traction, p);
}

AxisymSolution solve_pressure(const ShellGeometry& g, const OrthotropicMaterial& m, double varpi) {
    return solve_radial_problem(g, StressLaw::from(m), LoadCase::Kind::Pressure, varpi);
}

AxisymSolution solve_rim_flexure(const ShellGeometry& g, const OrthotropicMaterial& m, double mo) {
    return solve_radial_problem(g, StressLaw::from(m), LoadCase::Kind::RimFlexure, mo);
}

namespace {

TorsionSolution torsion_impl(const ShellGeometry& g, double G, double t) {
    g.require_valid();
    const double x = g.thinness();
    TorsionSolution sol;
    sol.r_T = 2.0 * g.eps * (1.0 + x * x) * G;
    sol.a2_slope = t / sol.r_T;
    sol.Theta = sol.a2_slope / g.rho_o;
    sol.t = t;
    return sol;
}

}  // namespace

TorsionSolution solve_torsion(const ShellGeometry& g, const OrthotropicMaterial& m, double t) {
    return torsion_impl(g, m.G, t);
}

TorsionSolution solve_torsion(const ShellGeometry& g, const KLMaterial& m, double t) {
    return torsion_impl(g, m.G, t);
}

TorsionSolution torsion_from_law(const ShellGeometry& g, const StressLaw& law, double t) {
    return torsion_impl(g, law.G, t);
}

double reactive_shear(const AxisymSolution& sol, double x1) {
    return m11_prime(sol.geom, sol.law, sol.state(), x1);
}

double ResidualReport::max() const {
    return std::max({field_eq, statics_f11, bc_m11_minus, bc_m11_plus, bc_m11p_minus,
                     bc_m11p_plus, integral, gamma_eq});
}

ResidualReport residuals(const AxisymSolution& sol, int stations) {
    stations = std::max(stations, 101);
    const ShellGeometry& g = sol.geom;
    const StressLaw& q = sol.law;
    const double rho = g.rho_o, eps = g.eps, l = g.l;
    const double e3 = eps * eps * eps;
    const double q3 = sol.load.kind == LoadCase::Kind::Pressure ? sol.load.magnitude : 0.0;
    const double f11_target =
        sol.load.kind == LoadCase::Kind::Traction ? sol.load.magnitude : 0.0;
    const double m_target =
        sol.load.kind == LoadCase::Kind::RimFlexure ? sol.load.magnitude : 0.0;
    const AxisymmetricState st = sol.state();

    ResidualReport rep;
    double field_scale = std::abs(q3), stat_scale = std::abs(f11_target);
    double field_max = 0.0, stat_max = 0.0;
    for (int i = 0; i < stations; ++i) {
        const double x1 = -l + 2.0 * l * i / (stations - 1);
        const double m11pp =
            (2.0 * e3 / (3.0 * rho)) * q.q11 * (sol.a1(x1, 3) - rho * sol.w(x1, 4));
        const ResultantSet r = resultants(g, q, st, x1);
        field_max = std::max(field_max, std::abs(m11pp - r.F22 / rho + q3));
        field_scale = std::max({field_scale, std::abs(m11pp), std::abs(r.F22 / rho)});
        stat_max = std::max(stat_max, std::abs(r.F11 - f11_target));
        const double memA = rho * sol.a1(x1, 1) - eps * eps / 3.0 * sol.w(x1, 2);
        stat_scale = std::max(stat_scale,
                              2.0 * (eps / rho) *
                                  (std::abs(q.q11 * memA) + std::abs(q.q12 * sol.w(x1)) +
                                   std::abs(q.q13 * rho * sol.radial.gamma)));
    }
    rep.field_eq = field_max / std::max(field_scale, 1e-300);
    rep.statics_f11 = stat_max / std::max(stat_scale, 1e-300);

    // rim conditions
    double m_scale = std::abs(m_target);
    for (double x1 : {-l, 0.0, l})
        m_scale = std::max(m_scale, std::abs(resultants(g, q, st, x1).M11));
    double mp_scale = 0.0;
    for (int i = 0; i < stations; ++i) {
        const double x1 = -l + 2.0 * l * i / (stations - 1);
        mp_scale = std::max(mp_scale, std::abs(m11_prime(g, q, st, x1)));
    }
    rep.bc_m11_minus =
        std::abs(resultants(g, q, st, -l).M11 - m_target) / std::max(m_scale, 1e-300);
    rep.bc_m11_plus =
        std::abs(resultants(g, q, st, l).M11 - m_target) / std::max(m_scale, 1e-300);
    rep.bc_m11p_minus = std::abs(m11_prime(g, q, st, -l)) / std::max(mp_scale, 1e-300);
    rep.bc_m11p_plus = std::abs(m11_prime(g, q, st, l)) / std::max(mp_scale, 1e-300);

    if (!q.kl) {
        // integral relation, via 2001-station Simpson on the resultants
        const int ni = 2001;
        double acc = 0.0, int_scale = 0.0;
        const double h = 2.0 * l / (ni - 1);
        for (int i = 0; i < ni; ++i) {
            const double x1 = -l + h * i;
            const ResultantSet r = resultants(g, q, st, x1);
            const double integrand = r.M22 / rho + r.F33;
            const double wgt = (i == 0 || i == ni - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += wgt * integrand;
            int_scale = std::max(int_scale, std::abs(r.M22 / rho) + std::abs(r.F33));
        }
        acc *= h / 3.0;
        rep.integral = std::abs(acc) / std::max(2.0 * l * int_scale, 1e-300);

        // gamma equation in the a-constants form (independent algebraic route)
        const BvpConstants k = bvp_constants(g, q);
        if (std::isfinite(k.a1)) {
            const double Pm = q.Delta * sol.load.magnitude / (2.0 * q.E1 * eps);
            double load = 0.0;
            if (sol.load.kind == LoadCase::Kind::Traction)
                load = -(1.0 + k.c * k.a1 / k.b) * Pm;
            else if (sol.load.kind == LoadCase::Kind::Pressure)
                load = k.a1 * (k.c_tilde / k.b) * rho * Pm;
            const cplx as[2] = {sol.radial.alpha1, sol.radial.alpha2};
            const cplx cs[2] = {sol.radial.c1, sol.radial.c2};
            cplx smod = 0.0;
            for (int i = 0; i < 2; ++i)
                smod += cs[i] / as[i] * (k.a1 + eps * eps * k.a0 * as[i] * as[i]) *
                        std::sinh(as[i] * l);
            const double lhs = (k.a1 * k.d / k.b + k.a2) * sol.radial.gamma;
            const double rhs = load + (2.0 / (l * rho)) * smod.real();
            rep.gamma_eq = std::abs(lhs - rhs) /
                           std::max({std::abs(lhs), std::abs(rhs), std::abs(load), 1e-300});
        }
    }
    return rep;
}

ResidualReport residuals(const TorsionSolution& sol, const ShellGeometry& g,
                         const StressLaw& law) {
    // a2 is linear and gamma = w = a1 = 0: the only nontrivial check is the
    // Neumann condition F21 + M21/rho = t, an algebraic identity.
    ResidualReport rep;
    const AxisymmetricState st = sol.state();
    const ResultantSet r = resultants(g, law, st, g.l);
    const double lhs = r.F21 + r.M21 / g.rho_o;
    rep.statics_f11 = std::abs(lhs - sol.t) / std::max(std::abs(sol.t), 1e-300);
    return rep;
}

ResidualReport residuals(const TorsionSolution& sol, const ShellGeometry& g,
                         const OrthotropicMaterial& m) {
    return residuals(sol, g, StressLaw::from(m));
}

}  // namespace orthoshell
