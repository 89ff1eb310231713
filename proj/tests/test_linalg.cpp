#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spinlab/linalg.hpp"
#include "spinlab/rng.hpp"

using namespace spinlab;

TEST_CASE("gaussian solve recovers a known solution") {
    linalg::Matrix a(3, 3);
    a(0, 0) = 4;  a(0, 1) = 1;  a(0, 2) = 0;
    a(1, 0) = 1;  a(1, 1) = 3;  a(1, 2) = -1;
    a(2, 0) = 0;  a(2, 1) = -1; a(2, 2) = 2;
    const std::vector<double> x_true = {1.0, -2.0, 0.5};
    const auto b = linalg::matvec(a, x_true);
    const auto x = linalg::solve(a, b);
    for (int i = 0; i < 3; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-12));
}

TEST_CASE("gaussian solve rejects singular systems") {
    linalg::Matrix a(2, 2);
    a(0, 0) = 1; a(0, 1) = 2;
    a(1, 0) = 2; a(1, 1) = 4;
    CHECK_THROWS_AS((linalg::solve(a, {1.0, 1.0})), std::invalid_argument);
}

TEST_CASE("svd finds the exact null space of a rank-deficient matrix") {
    // Rows all orthogonal to (1, -1, 0) and (0, 0, 1)^perp complement: build
    // rank-1 matrix with row space spanned by (1, 1, 1).
    linalg::Matrix a(5, 3);
    Rng rng(7);
    for (std::size_t r = 0; r < 5; ++r) {
        const double scale = rng.uniform(-2.0, 2.0);
        for (std::size_t c = 0; c < 3; ++c) a(r, c) = scale;
    }
    const auto s = linalg::svd(a);
    CHECK(s.sigma[0] > 0.1);
    CHECK(s.sigma[1] <= 1e-12 * s.sigma[0]);
    const auto null = linalg::null_space(s, 1e-8);
    CHECK(null.cols() == 2);
    // Each null vector must be orthogonal to (1, 1, 1).
    for (std::size_t k = 0; k < null.cols(); ++k) {
        const double dot = null(0, k) + null(1, k) + null(2, k);
        CHECK(std::abs(dot) < 1e-12);
    }
}

TEST_CASE("svd singular values match a hand-built diagonal case") {
    linalg::Matrix a(3, 2);
    a(0, 0) = 3.0;
    a(1, 1) = 4.0;
    const auto s = linalg::svd(a);
    CHECK(s.sigma[0] == doctest::Approx(4.0));
    CHECK(s.sigma[1] == doctest::Approx(3.0));
}

TEST_CASE("least squares returns the minimum-norm solution on underdetermined systems") {
    // x + y = 2 has minimum-norm solution (1, 1).
    linalg::Matrix a(1, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    const auto x = linalg::least_squares(a, {2.0}, 1e-12);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric matrix storage keeps symmetry exact") {
    linalg::SymmetricMatrix m(4);
    m.at(1, 3) = 0.25;
    CHECK(m(3, 1) == 0.25);
    CHECK(m.packed_size() == 10);
    const auto y = m.apply({0.0, 0.0, 0.0, 2.0});
    CHECK(y[1] == 0.5);
    CHECK(y[3] == 0.0);
}
