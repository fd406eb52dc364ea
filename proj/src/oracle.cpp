#include "orthoshell/oracle.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <cmath>
#include <vector>

namespace orthoshell {

AxisymmetricState GridSolution::state() const {
    AxisymmetricState s;
    const double x0 = x[0];
    const double h = x[1] - x[0];
    s.w = Profile::sampled(x0, h, w);
    s.a1 = Profile::sampled(x0, h, a1);
    if (a2.size() == x.size() && a2.cwiseAbs().maxCoeff() > 0.0)
        s.a2 = Profile::sampled(x0, h, a2);
    s.gamma = gamma;
    return s;
}

namespace {

// Linear functional of one resultant w.r.t. (w, w'', a1', gamma), probed on
// the quadrature oracle so no closed-form coefficient is trusted.
struct Functional {
    double w = 0, wpp = 0, a1p = 0, gam = 0;
};

struct ProbedLaw {
    Functional F11, F22, M11, M22, F33;
};

ProbedLaw probe_functionals(const ShellGeometry& g, const StressLaw& law) {
    const int quad_n = 40;
    AxisymmetricState probe_w, probe_wpp, probe_a1p, probe_gam;
    probe_w.w = Profile::constant(1.0);
    probe_wpp.w = Profile::polynomial({0.0, 0.0, 0.5});  // w'' = 1, w(0) = 0
    probe_a1p.a1 = Profile::linear(1.0);
    probe_gam.gamma = 1.0;

    auto fill = [&](auto pick) {
        Functional f;
        f.w = pick(resultants_by_quadrature(g, law, probe_w, 0.0, quad_n));
        f.wpp = pick(resultants_by_quadrature(g, law, probe_wpp, 0.0, quad_n));
        f.a1p = pick(resultants_by_quadrature(g, law, probe_a1p, 0.0, quad_n));
        f.gam = law.kl ? 0.0 : pick(resultants_by_quadrature(g, law, probe_gam, 0.0, quad_n));
        return f;
    };
    ProbedLaw p;
    p.F11 = fill([](const ResultantSet& r) { return r.F11; });
    p.F22 = fill([](const ResultantSet& r) { return r.F22; });
    p.M11 = fill([](const ResultantSet& r) { return r.M11; });
    p.M22 = fill([](const ResultantSet& r) { return r.M22; });
    p.F33 = fill([](const ResultantSet& r) { return r.F33; });
    return p;
}

// eliminate a1' through the F11 = const relation
struct Eliminated {
    double w = 0, wpp = 0, gam = 0, cst = 0;
};

Eliminated eliminate(const Functional& f, const Functional& f11, double f11_target) {
    const double r = f.a1p / f11.a1p;
    return {f.w - r * f11.w, f.wpp - r * f11.wpp, f.gam - r * f11.gam, r * f11_target};
}

GridSolution fd_solve_impl(const ShellGeometry& g, const StressLaw& law,
                           const LoadCase& load, int n) {
    g.require_valid();
    if (n < 201 || n % 2 == 0)
        throw DomainError("fd_solve: grid size must be odd and >= 201");
    const double rho = g.rho_o, l = g.l;
    const double h = 2.0 * l / (n - 1);

    GridSolution gs;
    gs.n = n;
    gs.x = Eigen::VectorXd::LinSpaced(n, -l, l);

    if (load.kind == LoadCase::Kind::Torsion) {
        // r_T a2'' = 0 with r_T a2'(+-l) = t; nullspace pinned by a2(0) = 0
        const double rT = 2.0 * g.eps * (1.0 + g.thinness() * g.thinness()) * law.G;
        const int ntot = n + 2;  // one ghost per rim
        std::vector<Eigen::Triplet<double>> trip;
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ntot);
        auto id = [&](int j) { return j + 1; };
        int row = 0;
        const int mid = (n - 1) / 2;
        for (int j = 0; j < n; ++j, ++row) {
            if (j == mid) {
                trip.emplace_back(row, id(j), 1.0);
                rhs[row] = 0.0;
            } else {
                trip.emplace_back(row, id(j - 1), 1.0);
                trip.emplace_back(row, id(j), -2.0);
                trip.emplace_back(row, id(j + 1), 1.0);
                rhs[row] = 0.0;
            }
        }
        for (int j : {0, n - 1}) {
            trip.emplace_back(row, id(j + 1), rT / (2.0 * h));
            trip.emplace_back(row, id(j - 1), -rT / (2.0 * h));
            rhs[row] = load.magnitude;
            ++row;
        }
        Eigen::SparseMatrix<double> A(ntot, ntot);
        A.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
        if (lu.info() != Eigen::Success)
            throw SingularSystem("fd_solve(torsion): factorization failed");
        Eigen::VectorXd sol = lu.solve(rhs);
        gs.a2 = sol.segment(1, n);
        gs.w = Eigen::VectorXd::Zero(n);
        gs.a1 = Eigen::VectorXd::Zero(n);
        return gs;
    }

    const ProbedLaw P = probe_functionals(g, law);
    const double f11_target =
        load.kind == LoadCase::Kind::Traction ? load.magnitude : 0.0;
    const double q3 = load.kind == LoadCase::Kind::Pressure ? load.magnitude : 0.0;
    const double m_target =
        load.kind == LoadCase::Kind::RimFlexure ? load.magnitude : 0.0;

    const Eliminated M = eliminate(P.M11, P.F11, f11_target);
    const Eliminated F = eliminate(P.F22, P.F11, f11_target);
    const Eliminated T = eliminate(P.M22, P.F11, f11_target);
    const Eliminated S = eliminate(P.F33, P.F11, f11_target);
    const Eliminated I{T.w / rho + S.w, T.wpp / rho + S.wpp, T.gam / rho + S.gam,
                       T.cst / rho + S.cst};

    const bool kl = law.kl;
    const int nghost = n + 4;
    const int nun = nghost + (kl ? 0 : 1);
    const int gcol = nghost;
    auto id = [&](int j) { return j + 2; };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(nun) * 8);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nun);
    int row = 0;
    const double h2 = h * h;

    // field rows: D2[M11] - F22/rho + q3 = 0 at every real node
    const std::pair<int, double> second_diff[] = {{-1, 1.0}, {0, -2.0}, {1, 1.0}};
    for (int j = 0; j < n; ++j, ++row) {
        for (auto [dj, cc] : second_diff) {
            const int jj = j + dj;
            trip.emplace_back(row, id(jj - 1), cc / h2 * (M.wpp / h2));
            trip.emplace_back(row, id(jj), cc / h2 * (-2.0 * M.wpp / h2 + M.w));
            trip.emplace_back(row, id(jj + 1), cc / h2 * (M.wpp / h2));
            if (!kl) trip.emplace_back(row, gcol, cc / h2 * M.gam);
            rhs[row] -= cc / h2 * M.cst;
        }
        trip.emplace_back(row, id(j - 1), -(F.wpp / h2) / rho);
        trip.emplace_back(row, id(j), -(-2.0 * F.wpp / h2 + F.w) / rho);
        trip.emplace_back(row, id(j + 1), -(F.wpp / h2) / rho);
        if (!kl) trip.emplace_back(row, gcol, -F.gam / rho);
        rhs[row] += F.cst / rho - q3;
    }

    // rim rows: M11 = m_target and M11' = 0, through the ghosts
    for (int j : {0, n - 1}) {
        trip.emplace_back(row, id(j - 1), M.wpp / h2);
        trip.emplace_back(row, id(j), -2.0 * M.wpp / h2 + M.w);
        trip.emplace_back(row, id(j + 1), M.wpp / h2);
        if (!kl) trip.emplace_back(row, gcol, M.gam);
        rhs[row] = m_target - M.cst;
        ++row;
        const double h3 = h2 * h;
        trip.emplace_back(row, id(j - 2), -M.wpp / (2.0 * h3));
        trip.emplace_back(row, id(j - 1), M.wpp / h3 - M.w / (2.0 * h));
        trip.emplace_back(row, id(j + 1), -M.wpp / h3 + M.w / (2.0 * h));
        trip.emplace_back(row, id(j + 2), M.wpp / (2.0 * h3));
        rhs[row] = 0.0;
        ++row;
    }

    // trapezoid row for the integral constraint
    if (!kl) {
        for (int j = 0; j < n; ++j) {
            const double tw = (j == 0 || j == n - 1) ? h / 2.0 : h;
            trip.emplace_back(row, id(j - 1), tw * I.wpp / h2);
            trip.emplace_back(row, id(j), tw * (-2.0 * I.wpp / h2 + I.w));
            trip.emplace_back(row, id(j + 1), tw * I.wpp / h2);
            trip.emplace_back(row, gcol, tw * I.gam);
            rhs[row] -= tw * I.cst;
        }
        ++row;
    }

    // assemble; equilibrate rows then columns to unit max modulus
    Eigen::SparseMatrix<double> A(nun, nun);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd rmax = Eigen::VectorXd::Zero(nun), cmax = Eigen::VectorXd::Zero(nun);
    for (int k = 0; k < A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
            rmax[it.row()] = std::max(rmax[it.row()], std::abs(it.value()));
    for (int k = 0; k < A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
            it.valueRef() /= rmax[it.row()];
            cmax[it.col()] = std::max(cmax[it.col()], std::abs(it.value()));
        }
    for (int k = 0; k < A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
            it.valueRef() /= cmax[it.col()];
    Eigen::VectorXd rr = rhs.cwiseQuotient(rmax);

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
    if (lu.info() != Eigen::Success)
        throw SingularSystem("fd_solve: sparse factorization failed (n = " +
                             std::to_string(n) + ", row-equilibrated system)");
    Eigen::VectorXd y = lu.solve(rr);
    Eigen::VectorXd sol = y.cwiseQuotient(cmax);

    gs.w = sol.segment(2, n);
    gs.gamma = kl ? 0.0 : sol[gcol];
    gs.a2 = Eigen::VectorXd::Zero(n);

    // recover a1 from the discrete F11 = const relation, a1(0) = 0
    Eigen::VectorXd a1p(n);
    for (int j = 0; j < n; ++j) {
        const double wpp = (sol[id(j - 1)] - 2.0 * sol[id(j)] + sol[id(j + 1)]) / h2;
        a1p[j] = (f11_target - P.F11.w * gs.w[j] - P.F11.wpp * wpp -
                  P.F11.gam * gs.gamma) /
                 P.F11.a1p;
    }
    gs.a1 = Eigen::VectorXd::Zero(n);
    for (int j = 1; j < n; ++j)
        gs.a1[j] = gs.a1[j - 1] + 0.5 * (a1p[j] + a1p[j - 1]) * h;
    const int mid = (n - 1) / 2;
    gs.a1.array() -= gs.a1[mid];
    return gs;
}

}  // namespace

GridSolution fd_solve(const ShellGeometry& g, const StressLaw& law, const LoadCase& load,
                      int n) {
    return fd_solve_impl(g, law, load, n);
}

GridSolution fd_solve(const ShellGeometry& g, const OrthotropicMaterial& m,
                      const LoadCase& load, int n) {
    return fd_solve_impl(g, StressLaw::from(m), load, n);
}

GridSolution fd_solve(const ShellGeometry& g, const KLMaterial& m, const LoadCase& load,
                      int n) {
    return fd_solve_impl(g, StressLaw::from(m), load, n);
}

ConvergenceReport convergence_order(const ShellGeometry& g, const StressLaw& law,
                                    const LoadCase& load, int n0) {
    if (n0 < 201) throw DomainError("convergence_order: n0 must be >= 201");
    const GridSolution s0 = fd_solve(g, law, load, n0);
    const GridSolution s1 = fd_solve(g, law, load, 2 * n0 - 1);
    const GridSolution s2 = fd_solve(g, law, load, 4 * n0 - 3);
    auto field = [&](const GridSolution& s) -> const Eigen::VectorXd& {
        return load.kind == LoadCase::Kind::Torsion ? s.a2 : s.w;
    };
    auto diff = [&](const GridSolution& fine, const GridSolution& coarse) {
        double d = 0.0;
        for (int j = 0; j < coarse.n; ++j)
            d = std::max(d, std::abs(field(fine)[2 * j] - field(coarse)[j]));
        return d;
    };
    ConvergenceReport rep;
    rep.diff_coarse = diff(s1, s0);
    rep.diff_fine = diff(s2, s1);
    const double scale = field(s2).cwiseAbs().maxCoeff();
    if (rep.diff_fine < 1e-13 * std::max(scale, 1e-300)) {
        rep.exact = true;
        rep.order = std::numeric_limits<double>::infinity();
    } else {
        rep.order = std::log2(rep.diff_coarse / rep.diff_fine);
    }
    return rep;
}

ConvergenceReport convergence_order(const ShellGeometry& g, const OrthotropicMaterial& m,
                                    const LoadCase& load, int n0) {
    return convergence_order(g, StressLaw::from(m), load, n0);
}

namespace {

GridSolution converged_impl(const ShellGeometry& g, const StressLaw& law,
                            const LoadCase& load, int n) {
    const int nc = (n + 1) / 2;
    if (nc % 2 == 0 || nc < 201)
        throw DomainError("fd_solve_converged: (n+1)/2 must be odd and >= 201");
    const GridSolution fine = fd_solve(g, law, load, n);
    const GridSolution coarse = fd_solve(g, law, load, nc);
    GridSolution out = coarse;
    for (int j = 0; j < nc; ++j) {
        out.w[j] = (4.0 * fine.w[2 * j] - coarse.w[j]) / 3.0;
        out.a1[j] = (4.0 * fine.a1[2 * j] - coarse.a1[j]) / 3.0;
        out.a2[j] = (4.0 * fine.a2[2 * j] - coarse.a2[j]) / 3.0;
    }
    out.gamma = (4.0 * fine.gamma - coarse.gamma) / 3.0;
    return out;
}

}  // namespace

GridSolution fd_solve_converged(const ShellGeometry& g, const StressLaw& law,
                                const LoadCase& load, int n) {
    return converged_impl(g, law, load, n);
}

GridSolution fd_solve_converged(const ShellGeometry& g, const OrthotropicMaterial& m,
                                const LoadCase& load, int n) {
    return converged_impl(g, StressLaw::from(m), load, n);
}

GridSolution fd_solve_converged(const ShellGeometry& g, const KLMaterial& m,
                                const LoadCase& load, int n) {
    return converged_impl(g, StressLaw::from(m), load, n);
}

}  // namespace orthoshell
