#include "spinlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinlab::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double asymmetry(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("asymmetry: matrix not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
    return worst;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

std::size_t SymmetricMatrix::flat_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // Row-major upper triangle: row i starts at i*n - i(i-1)/2.
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

std::vector<double> SymmetricMatrix::apply(const std::vector<double>& x) const {
    if (x.size() != n_) throw std::invalid_argument("SymmetricMatrix::apply: dimension mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Matrix SymmetricMatrix::dense() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

std::vector<double> solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) < 1e-300) throw std::invalid_argument("solve: singular system");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

Svd svd(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix w = a;
    Matrix v = Matrix::identity(n);

    // Hestenes sweeps: orthogonalize column pairs until all are mutually
    // orthogonal to working precision.
    constexpr int kMaxSweeps = 60;
    constexpr double kTol = 1e-15;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t r = 0; r < m; ++r) {
                    alpha += w(r, i) * w(r, i);
                    beta += w(r, j) * w(r, j);
                    gamma += w(r, i) * w(r, j);
                }
                if (std::abs(gamma) <= kTol * std::sqrt(alpha * beta) || gamma == 0.0) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < m; ++r) {
                    const double wi = w(r, i);
                    w(r, i) = c * wi - s * w(r, j);
                    w(r, j) = s * wi + c * w(r, j);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double vi = v(r, i);
                    v(r, i) = c * vi - s * v(r, j);
                    v(r, j) = s * vi + c * v(r, j);
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t r = 0; r < m; ++r) acc += w(r, j) * w(r, j);
        sigma[j] = std::sqrt(acc);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    Svd out;
    out.u_scaled = Matrix(m, n);
    out.v = Matrix(n, n);
    out.sigma.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.sigma[k] = sigma[src];
        for (std::size_t r = 0; r < m; ++r) out.u_scaled(r, k) = w(r, src);
        for (std::size_t r = 0; r < n; ++r) out.v(r, k) = v(r, src);
    }
    return out;
}

Matrix null_space(const Svd& s, double rel_threshold) {
    const std::size_t n = s.sigma.size();
    const double cutoff = rel_threshold * (n ? s.sigma[0] : 0.0);
    std::size_t first = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (s.sigma[k] <= cutoff) {
            first = k;
            break;
        }
    }
    Matrix basis(n, n - first);
    for (std::size_t k = first; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) basis(r, k - first) = s.v(r, k);
    return basis;
}

std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b,
                                  double rel_threshold) {
    if (b.size() != a.rows()) throw std::invalid_argument("least_squares: dimension mismatch");
    const Svd s = svd(a);
    const std::size_t n = a.cols();
    const double cutoff = rel_threshold * (n ? s.sigma[0] : 0.0);
    std::vector<double> x(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (s.sigma[k] <= cutoff || s.sigma[k] == 0.0) continue;
        double proj = 0.0;  // (sigma_k u_k) . b
        for (std::size_t r = 0; r < a.rows(); ++r) proj += s.u_scaled(r, k) * b[r];
        const double coef = proj / (s.sigma[k] * s.sigma[k]);
        for (std::size_t r = 0; r < n; ++r) x[r] += coef * s.v(r, k);
    }
    return x;
}

}  // namespace spinlab::linalg
