#pragma once

#include <cstddef>
#include <vector>

namespace spinlab::linalg {

/// Dense row-major matrix of doubles. Small sizes only; no view machinery.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

/// Max absolute entry of A - A^T.
double asymmetry(const Matrix& a);

/// Symmetric matrix with only the upper triangle stored, so symmetry is exact
/// by construction.
class SymmetricMatrix {
  public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), upper_(n * (n + 1) / 2, 0.0) {}

    static SymmetricMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    double& at(std::size_t i, std::size_t j) { return upper_[flat_index(i, j)]; }
    double operator()(std::size_t i, std::size_t j) const { return upper_[flat_index(i, j)]; }

    std::vector<double> apply(const std::vector<double>& x) const;
    Matrix dense() const;

    /// Number of independent entries, n(n+1)/2.
    std::size_t packed_size() const { return upper_.size(); }

  private:
    std::size_t flat_index(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::vector<double> upper_;
};

/// Solve Ax = b by Gaussian elimination with partial pivoting.
/// Throws std::invalid_argument on dimension mismatch or singular pivot.
std::vector<double> solve(Matrix a, std::vector<double> b);

/// Thin SVD A = U diag(sigma) V^T via one-sided (Hestenes) Jacobi rotations.
/// Column i of `u_scaled` is sigma_i * u_i; singular values are sorted
/// descending. One-sided Jacobi keeps tiny singular values accurate, which the
/// relative null-space threshold depends on.
struct Svd {
    Matrix u_scaled;            // rows x cols, column j = sigma_j * u_j
    std::vector<double> sigma;  // descending
    Matrix v;                   // cols x cols, right singular vectors as columns
};

Svd svd(const Matrix& a);

/// Columns of V whose singular value is <= rel_threshold * sigma_max.
/// Returned as a (cols x k) matrix of orthonormal basis columns.
Matrix null_space(const Svd& s, double rel_threshold);

/// Minimum-norm least-squares solution of Ax = b using the SVD, truncating
/// singular values <= rel_threshold * sigma_max.
std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b,
                                  double rel_threshold);

}  // namespace spinlab::linalg
