#include <doctest.h>

#include <array>
#include <cmath>

#include "spinlab/errors.hpp"
#include "spinlab/norms.hpp"
#include "spinlab/numeric.hpp"
#include "spinlab/rng.hpp"

using namespace spinlab;
using norms::Element;

namespace {
const Signature kSig{3, 0};

Element elem(double s, double v1, double v2, double v3) {
    return Element(s, {v1, v2, v3}, kSig);
}
}  // namespace

TEST_CASE("bilinear norm residual worked examples") {
    // Euclidean case: l = 5 at (3,4), gradient s/5.
    auto l2 = linalg::SymmetricMatrix::identity(2);
    CHECK(norms::bilinear_norm_value(l2, {3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(norms::bilinear_norm_residual(l2, {3.0, 4.0}) <= 1e-7);

    // Anisotropic case: l = sqrt(3) at (1,1).
    linalg::SymmetricMatrix diag(2);
    diag.at(0, 0) = 2.0;
    diag.at(1, 1) = 1.0;
    CHECK(norms::bilinear_norm_value(diag, {1.0, 1.0}) == doctest::Approx(std::sqrt(3.0)));
    CHECK(norms::bilinear_norm_residual(diag, {1.0, 1.0}) <= 1e-7);

    // Unit sphere point: residual small and l(grad l) = 1.
    CHECK(norms::bilinear_norm_residual(l2, {1.0, 0.0}) <= 1e-7);
    const auto grad = numeric::central_gradient(
        [&l2](const std::vector<double>& x) { return norms::bilinear_norm_value(l2, x); },
        {1.0, 0.0});
    CHECK(norms::bilinear_norm_value(l2, grad) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS((norms::bilinear_norm_value(l2, {0.0, 0.0})), OutsideNormDomain);
}

TEST_CASE("inverse-map Jacobian worked examples") {
    // At the identity the Jacobian is -I.
    const auto at_one = norms::inverse_field_jacobian(Element::identity(kSig));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(at_one(i, j) == doctest::Approx(i == j ? -1.0 : 0.0));

    // Scaling law J(2) = -I/4 on the scalar ray.
    const auto at_two = norms::inverse_field_jacobian(elem(2, 0, 0, 0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(at_two(i, j) == doctest::Approx(i == j ? -0.25 : 0.0));

    // Finite-difference oracle at a generic unit.
    const auto s = elem(1.2, 0.3, -0.2, 0.1);
    const auto jac = norms::inverse_field_jacobian(s);
    auto x = coordinates(s);
    for (std::size_t j = 0; j < 4; ++j) {
        const double h = 1e-6 * (1.0 + std::abs(x[j]));
        auto plus = x, minus = x;
        plus[j] += h;
        minus[j] -= h;
        const auto f_plus = coordinates(inverse(from_coordinates(plus, kSig)));
        const auto f_minus = coordinates(inverse(from_coordinates(minus, kSig)));
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(jac(i, j) ==
                  doctest::Approx((f_plus[i] - f_minus[i]) / (2.0 * h)).epsilon(1e-6));
    }

    CHECK_THROWS_AS(norms::inverse_field_jacobian(elem(1, 1, 0, 0)), NullElement);
}

TEST_CASE("uncurling solver finds the identity metric for signature (3,0)") {
    norms::SolverConfig cfg;
    const auto result = norms::solve_uncurling(kSig, cfg);
    CHECK(result.curl_nullspace_dim == 1);
    CHECK(result.constraint_residual <= 1e-8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(result.candidate.entries(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-8);
}

TEST_CASE("uncurling solver on signature (1,0) reports a 2-dimensional null space") {
    norms::SolverConfig cfg;
    const auto result = norms::solve_uncurling(Signature{1, 0}, cfg);
    CHECK(result.curl_nullspace_dim == 2);
    CHECK(result.constraint_residual <= 1e-8);
    // The pairing rows pin the diagonal; the minimum-norm pick zeroes the
    // free off-diagonal direction.
    CHECK(std::abs(result.candidate.entries(0, 0) - 1.0) <= 1e-8);
    CHECK(std::abs(result.candidate.entries(1, 1) - 1.0) <= 1e-8);
    CHECK(std::abs(result.candidate.entries(0, 1)) <= 1e-8);
}

TEST_CASE("uncurling solver error paths") {
    norms::SolverConfig cfg;
    cfg.sample_count = 0;
    CHECK_THROWS_AS(norms::solve_uncurling(kSig, cfg), EmptySolution);

    norms::SolverConfig unreachable;
    unreachable.q_floor = 10.0;  // box around 1 cannot reach Q = 10
    CHECK_THROWS_AS(norms::solve_uncurling(kSig, unreachable), SamplingFailure);

    norms::SolverConfig bad;
    bad.box_radius = 1.5;
    CHECK_THROWS_AS(norms::solve_uncurling(kSig, bad), std::invalid_argument);
}

TEST_CASE("unital norm worked examples") {
    const auto candidate = norms::identity_candidate(kSig);

    const auto at_one = norms::unital_norm(Element::identity(kSig), candidate, 64);
    CHECK(at_one.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto doubled = norms::unital_norm(elem(2, 0, 0, 0), candidate, 256);
    CHECK(doubled.value == doctest::Approx(2.0).epsilon(1e-12));

    const auto generic = norms::unital_norm(elem(2, 1, 0, 0), candidate, 1024);
    CHECK(generic.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    CHECK(generic.path_steps == 1024);

    // Doubling the panel count changes the value by less than the estimate.
    const auto finer = norms::unital_norm(elem(2, 1, 0, 0), candidate, 2048);
    CHECK(std::abs(finer.value - generic.value) < generic.residual_estimate);

    CHECK_THROWS_AS(norms::unital_norm(elem(1, 1, 0, 0), candidate), PathCrossesNullCone);
    CHECK_THROWS_AS(norms::unital_norm(elem(2, 1, 0, 0), candidate, 0), std::invalid_argument);
}

TEST_CASE("closed form norm worked examples") {
    CHECK(norms::closed_form_norm(Element::identity(kSig)) == 1.0);
    CHECK(norms::closed_form_norm(elem(2, 1, 0, 0)) == doctest::Approx(std::sqrt(3.0)));
    CHECK_THROWS_AS(norms::closed_form_norm(elem(1, 1, 0, 0)), OutsideNormDomain);
    CHECK_THROWS_AS(norms::closed_form_norm(elem(0, 2, 0, 0)), OutsideNormDomain);
}

TEST_CASE("gradient relation holds at pinned points") {
    const auto candidate = norms::identity_candidate(kSig);
    CHECK(norms::gradient_relation_residual(Element::identity(kSig), candidate, 256) <= 1e-6);
    CHECK(norms::gradient_relation_residual(1.2 * Element::identity(kSig), candidate, 256) <=
          1e-6);
    CHECK(norms::gradient_relation_residual(elem(1.1, 0.3, -0.2, 0.25), candidate, 256) <= 1e-6);
}

TEST_CASE("path independence across a bent polyline") {
    const auto candidate = norms::identity_candidate(kSig);
    const auto s = elem(1.3, 0.2, -0.3, 0.1);
    const auto straight = norms::unital_norm(s, candidate, 512);
    const std::array<Element, 3> bent_path = {Element::identity(kSig), elem(0.9, -0.1, 0.2, 0.0),
                                              s};
    const auto bent = norms::unital_norm_along(bent_path, candidate, 512);
    CHECK(bent.value == doctest::Approx(straight.value).epsilon(1e-10));
}

TEST_CASE("pairing and curl residuals vanish for the identity metric") {
    const auto candidate = norms::identity_candidate(kSig);
    Rng rng(31);
    norms::SolverConfig cfg;
    const auto samples = norms::sample_units(kSig, cfg, rng, 25);
    for (const auto& s : samples) {
        CHECK(std::abs(norms::inverse_metric_pairing(s, candidate) - 1.0) <= 1e-12);
        CHECK(norms::curl_symmetry_residual(s, candidate) <= 1e-12);
    }
}
