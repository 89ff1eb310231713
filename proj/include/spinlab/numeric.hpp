#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace spinlab::numeric {

/// 8-point Gauss-Legendre abscissae/weights on [-1, 1].
inline constexpr std::array<double, 8> kGauss8Nodes = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362};

inline constexpr std::array<double, 8> kGauss8Weights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

/// Composite 8th-order Gauss-Legendre quadrature of f over [a, b] with `panels` panels.
template <class F>
double integrate(F&& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double mid = a + (k + 0.5) * h;
        double panel = 0.0;
        for (std::size_t i = 0; i < kGauss8Nodes.size(); ++i) {
            panel += kGauss8Weights[i] * f(mid + 0.5 * h * kGauss8Nodes[i]);
        }
        sum += 0.5 * h * panel;
    }
    return sum;
}

/// Central-difference gradient of a scalar function of n variables.
/// Step is scaled per coordinate: h_i = step_scale * (1 + |x_i|).
inline std::vector<double> central_gradient(const std::function<double(const std::vector<double>&)>& f,
                                            std::vector<double> x, double step_scale = 1e-6) {
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = step_scale * (1.0 + std::abs(x[i]));
        const double xi = x[i];
        x[i] = xi + h;
        const double fp = f(x);
        x[i] = xi - h;
        const double fm = f(x);
        x[i] = xi;
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

/// |a - b| scaled by max(1, |b|); the residual convention used in reports.
inline double rel_residual(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace spinlab::numeric
