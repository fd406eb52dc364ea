#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <vector>

#include "orthoshell/errors.hpp"

namespace orthoshell {

/// Unshearable orthotropic material described by its ten technical moduli.
/// The three reciprocity relations E1/E2 = nu12/nu21, E1/E3 = nu13/nu31,
/// E2/E3 = nu23/nu32 are exact consequences of the tensor symmetry; validate()
/// checks them together with positive-definiteness on the constraint space.
template <typename Scalar>
struct OrthotropicMaterialT {
    Scalar E1, E2, E3;
    Scalar nu12, nu21, nu13, nu31, nu23, nu32;
    Scalar G;

    // derived ratios, never stored
    Scalar eta() const { return E2 / E1; }
    Scalar lambda() const { return E3 / E1; }
    Scalar mu() const { return E3 / E2; }
};

using OrthotropicMaterial = OrthotropicMaterialT<double>;

/// The four surviving moduli once thickness changes are forbidden.
template <typename Scalar>
struct KLMaterialT {
    Scalar E1, E2;
    Scalar nu12, nu21;
    Scalar G;
};

using KLMaterial = KLMaterialT<double>;

/// The seven basis coefficients of the constrained stiffness tensor on
/// (W1, W2, V3, W3); C1212 equals the shear modulus G.
template <typename Scalar>
struct StiffnessComponentsT {
    Scalar C1111, C2222, C3333, C1212;
    Scalar C1122, C1133, C2233;
};

using StiffnessComponents = StiffnessComponentsT<double>;

/// Physical strain components on the constraint space (shear entries through
/// the thickness vanish identically).
template <typename Scalar>
struct StrainComponentsT {
    Scalar e11 = 0, e22 = 0, e33 = 0, e12 = 0;
};

template <typename Scalar>
struct StressComponentsT {
    Scalar s11 = 0, s22 = 0, s33 = 0, s12 = 0;
};

using StrainComponents = StrainComponentsT<double>;
using StressComponents = StressComponentsT<double>;

template <typename Scalar>
Scalar delta(const OrthotropicMaterialT<Scalar>& m) {
    return Scalar(1) - m.nu12 * m.nu21 - m.nu13 * m.nu31 - m.nu23 * m.nu32 -
           Scalar(2) * m.nu12 * m.nu23 * m.nu31;
}

/// Symmetric Gram matrix of the stiffness tensor on the orthonormal basis
/// (W1, W2, V3, W3). Positive-definiteness of this matrix is the
/// admissibility condition on the material.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> gram_matrix(const StiffnessComponentsT<Scalar>& c) {
    Eigen::Matrix<Scalar, 4, 4> g;
    g << c.C1111, c.C1122, c.C1133, Scalar(0),
         c.C1122, c.C2222, c.C2233, Scalar(0),
         c.C1133, c.C2233, c.C3333, Scalar(0),
         Scalar(0), Scalar(0), Scalar(0), Scalar(2) * c.C1212;
    return g;
}

template <typename Scalar>
StiffnessComponentsT<Scalar> stiffness_from_technical(const OrthotropicMaterialT<Scalar>& m) {
    const Scalar d = delta(m);
    if (!(d > Scalar(0)))
        throw NonPositiveDelta("stiffness_from_technical: Delta <= 0");
    StiffnessComponentsT<Scalar> c;
    c.C1111 = m.E1 * (Scalar(1) - m.nu23 * m.nu32) / d;
    c.C2222 = m.E2 * (Scalar(1) - m.nu13 * m.nu31) / d;
    c.C3333 = m.E3 * (Scalar(1) - m.nu12 * m.nu21) / d;
    c.C1122 = m.E1 * (m.nu21 + m.nu23 * m.nu31) / d;
    c.C1133 = m.E1 * (m.nu31 + m.nu21 * m.nu32) / d;
    c.C2233 = m.E2 * (m.nu32 + m.nu31 * m.nu12) / d;
    c.C1212 = m.G;
    return c;
}

template <typename Scalar>
OrthotropicMaterialT<Scalar> technical_from_stiffness(const StiffnessComponentsT<Scalar>& c) {
    using std::abs;
    const Scalar det3 = c.C1111 * c.C2222 * c.C3333 - c.C3333 * c.C1122 * c.C1122 -
                        c.C2222 * c.C1133 * c.C1133 - c.C1111 * c.C2233 * c.C2233 +
                        Scalar(2) * c.C1122 * c.C1133 * c.C2233;
    const Scalar d1 = c.C2222 * c.C3333 - c.C2233 * c.C2233;
    const Scalar d2 = c.C1111 * c.C3333 - c.C1133 * c.C1133;
    const Scalar d3 = c.C1111 * c.C2222 - c.C1122 * c.C1122;
    const Scalar s1 = abs(c.C2222 * c.C3333) + abs(c.C2233 * c.C2233);
    const Scalar s2 = abs(c.C1111 * c.C3333) + abs(c.C1133 * c.C1133);
    const Scalar s3 = abs(c.C1111 * c.C2222) + abs(c.C1122 * c.C1122);
    if (abs(d1) < Scalar(1e-14) * s1 || abs(d2) < Scalar(1e-14) * s2 ||
        abs(d3) < Scalar(1e-14) * s3)
        throw SingularStiffness("technical_from_stiffness: vanishing principal minor");
    OrthotropicMaterialT<Scalar> m;
    m.E1 = det3 / d1;
    m.E2 = det3 / d2;
    m.E3 = det3 / d3;
    m.nu12 = (c.C3333 * c.C1122 - c.C1133 * c.C2233) / d1;
    m.nu21 = (c.C3333 * c.C1122 - c.C1133 * c.C2233) / d2;
    m.nu13 = (c.C2222 * c.C1133 - c.C1122 * c.C2233) / d1;
    m.nu31 = (c.C2222 * c.C1133 - c.C1122 * c.C2233) / d3;
    m.nu23 = (c.C1111 * c.C2233 - c.C1122 * c.C1133) / d2;
    m.nu32 = (c.C1111 * c.C2233 - c.C1122 * c.C1133) / d3;
    m.G = c.C1212;
    return m;
}

/// Stress response on the constraint space.
template <typename Scalar>
StressComponentsT<Scalar> apply_stiffness(const OrthotropicMaterialT<Scalar>& m,
                                          const StrainComponentsT<Scalar>& e) {
    const Scalar d = delta(m);
    StressComponentsT<Scalar> s;
    const Scalar q11 = m.E1 * (Scalar(1) - m.nu23 * m.nu32) / d;
    const Scalar q22 = m.E2 * (Scalar(1) - m.nu13 * m.nu31) / d;
    const Scalar q33 = m.E3 * (Scalar(1) - m.nu12 * m.nu21) / d;
    const Scalar q12 = m.E1 * (m.nu21 + m.nu23 * m.nu31) / d;
    const Scalar q13 = m.E1 * (m.nu31 + m.nu21 * m.nu32) / d;
    const Scalar q23 = m.E2 * (m.nu32 + m.nu31 * m.nu12) / d;
    s.s11 = q11 * e.e11 + q12 * e.e22 + q13 * e.e33;
    s.s22 = q12 * e.e11 + q22 * e.e22 + q23 * e.e33;
    s.s33 = q13 * e.e11 + q23 * e.e22 + q33 * e.e33;
    s.s12 = Scalar(2) * m.G * e.e12;
    return s;
}

/// Inverse response, written with the compliance entries of the technical
/// representation (exact inverse of apply_stiffness on the constraint space).
template <typename Scalar>
StrainComponentsT<Scalar> apply_compliance(const OrthotropicMaterialT<Scalar>& m,
                                           const StressComponentsT<Scalar>& s) {
    StrainComponentsT<Scalar> e;
    e.e11 = s.s11 / m.E1 - m.nu12 / m.E1 * s.s22 - m.nu13 / m.E1 * s.s33;
    e.e22 = -m.nu12 / m.E1 * s.s11 + s.s22 / m.E2 - m.nu23 / m.E2 * s.s33;
    e.e33 = -m.nu13 / m.E1 * s.s11 - m.nu23 / m.E2 * s.s22 + s.s33 / m.E3;
    e.e12 = s.s12 / (Scalar(2) * m.G);
    return e;
}

template <typename Scalar>
KLMaterialT<Scalar> kl_reduce(const OrthotropicMaterialT<Scalar>& m) {
    return KLMaterialT<Scalar>{m.E1, m.E2, m.nu12, m.nu21, m.G};
}

struct ValidationIssue {
    std::string constraint;
    double residual;
};

/// Outcome of validate(); empty iff the material is admissible.
struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks positivity of the moduli, the three reciprocity relations (relative
/// tolerance 1e-9) and positive-definiteness of the 4x4 Gram matrix.
/// Never throws; all violations are reported with their residuals.
inline ValidationReport validate(const OrthotropicMaterial& m) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& what, double res) {
        rep.issues.push_back({what, res});
    };
    const double fields[] = {m.E1, m.E2, m.E3, m.nu12, m.nu21, m.nu13,
                             m.nu31, m.nu23, m.nu32, m.G};
    for (double v : fields)
        if (!std::isfinite(v)) {
            flag("finite fields", std::abs(v));
            return rep;
        }
    if (!(m.E1 > 0)) flag("E1 > 0", m.E1);
    if (!(m.E2 > 0)) flag("E2 > 0", m.E2);
    if (!(m.E3 > 0)) flag("E3 > 0", m.E3);
    if (!(m.G > 0)) flag("G > 0", m.G);
    // reciprocity as cross products: Ei * nu_ji = Ej * nu_ij
    auto recip = [&flag](const char* name, double lhs, double rhs) {
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        const double res = std::abs(lhs - rhs) / scale;
        if (lhs == 0.0 && rhs == 0.0) return;
        if (res > 1e-9) flag(name, res);
    };
    recip("E1/E2 = nu12/nu21", m.E1 * m.nu21, m.E2 * m.nu12);
    recip("E1/E3 = nu13/nu31", m.E1 * m.nu31, m.E3 * m.nu13);
    recip("E2/E3 = nu23/nu32", m.E2 * m.nu32, m.E3 * m.nu23);
    const double d = delta(m);
    if (!(d > 0)) {
        flag("Delta > 0", d);
        return rep;
    }
    const Eigen::Matrix4d g = gram_matrix(stiffness_from_technical(m));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
    const double lmin = es.eigenvalues().minCoeff();
    if (!(lmin > 0)) flag("Gram matrix positive-definite", lmin);
    return rep;
}

/// Builds a material from measured (noisy) moduli: checks the reciprocity
/// relations to the given tolerance, then enforces them exactly by keeping
/// (E1, E2, E3, nu12, nu13, nu23, G) primary and recomputing nu21, nu31, nu32.
inline OrthotropicMaterial from_measured(const OrthotropicMaterial& noisy, double tol) {
    auto rel = [](double lhs, double rhs) {
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        return (lhs == 0.0 && rhs == 0.0) ? 0.0 : std::abs(lhs - rhs) / scale;
    };
    const double r1 = rel(noisy.E1 * noisy.nu21, noisy.E2 * noisy.nu12);
    const double r2 = rel(noisy.E1 * noisy.nu31, noisy.E3 * noisy.nu13);
    const double r3 = rel(noisy.E2 * noisy.nu32, noisy.E3 * noisy.nu23);
    const double worst = std::max({r1, r2, r3});
    if (worst > tol)
        throw DomainError("from_measured: reciprocity violated beyond tolerance (" +
                          std::to_string(worst) + ")");
    OrthotropicMaterial m = noisy;
    m.nu21 = m.nu12 * m.E2 / m.E1;
    m.nu31 = m.nu13 * m.E3 / m.E1;
    m.nu32 = m.nu23 * m.E3 / m.E2;
    return m;
}

/// Isotropic special case restricted to the constraint space.
inline OrthotropicMaterial isotropic(double E, double nu) {
    return OrthotropicMaterial{E, E, E, nu, nu, nu, nu, nu, nu, E / (2.0 * (1.0 + nu))};
}

}  // namespace orthoshell
