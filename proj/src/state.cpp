#include "orthoshell/state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace orthoshell {

Profile Profile::polynomial(std::vector<double> coeffs) {
    return Profile([c = std::move(coeffs)](double x, int der) {
        double acc = 0.0;
        for (int k = static_cast<int>(c.size()) - 1; k >= der; --k) {
            double f = 1.0;
            for (int j = 0; j < der; ++j) f *= static_cast<double>(k - j);
            acc = acc * x + f * c[static_cast<size_t>(k)];
        }
        return acc;
    });
}

namespace {

// Derivatives of the degree-5 interpolant through six consecutive samples,
// evaluated by differentiating the Newton form on local coordinates.
double quintic_eval(const double* y, double t, int der) {
    // divided differences on nodes 0..5 (unit spacing)
    double dd[6];
    for (int i = 0; i < 6; ++i) dd[i] = y[i];
    for (int k = 1; k < 6; ++k)
        for (int i = 5; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / static_cast<double>(k);
    // Newton polynomial p(t) = sum dd[k] prod_{j<k}(t - j); expand to monomials
    double mono[6] = {0, 0, 0, 0, 0, 0};
    double basis[6] = {1, 0, 0, 0, 0, 0};  // coefficients of prod_{j<k}(t-j)
    for (int k = 0; k < 6; ++k) {
        for (int i = 0; i <= k; ++i) mono[i] += dd[k] * basis[i];
        if (k < 5) {
            // multiply basis by (t - k)
            for (int i = k + 1; i >= 1; --i) basis[i] = basis[i - 1] - k * basis[i];
            basis[0] *= -static_cast<double>(k);
        }
    }
    double acc = 0.0;
    for (int i = 5; i >= der; --i) {
        double f = 1.0;
        for (int j = 0; j < der; ++j) f *= static_cast<double>(i - j);
        acc = acc * t + f * mono[i];
    }
    return acc;
}

}  // namespace

Profile Profile::sampled(double x0, double h, Eigen::VectorXd values) {
    if (values.size() < 6)
        throw DomainError("Profile::sampled: need at least six samples");
    if (!(h > 0.0))
        throw DomainError("Profile::sampled: step must be positive");
    auto data = std::make_shared<Eigen::VectorXd>(std::move(values));
    return Profile([data, x0, h](double x, int der) {
        if (der > 4)
            throw DomainError("Profile: derivatives above 4th order unsupported");
        const int n = static_cast<int>(data->size());
        int j = static_cast<int>(std::floor((x - x0) / h)) - 2;
        j = std::clamp(j, 0, n - 6);
        const double t = (x - x0) / h - j;
        double window[6];
        for (int i = 0; i < 6; ++i) window[i] = (*data)[j + i];
        double scale = 1.0;
        for (int i = 0; i < der; ++i) scale /= h;
        return quintic_eval(window, t, der) * scale;
    });
}

}  // namespace orthoshell
